#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "latrec/cbc.hpp"
#include "latrec/transform.hpp"

namespace latrec {

// Text formats. Blank lines and lines starting with '#' are skipped on read.

/// `dim=<d> domain=<signed|nonneg>` then one index per line.
void write_index_set(std::ostream& os, const IndexSet& L);
IndexSet read_index_set(std::istream& is);

/// `n=<n> z=<z1>,<z2>,...`
void write_lattice(std::ostream& os, const Rank1Lattice& L);
Rank1Lattice read_lattice(std::istream& is);

/// Lattice line plus `c: <index> <c_k>` lines.
void write_cbc_result(std::ostream& os, const Rank1Lattice& L, const CTable& c);
Rank1Lattice read_cbc_result(std::istream& is, CTable* c_out);

nlohmann::json stats_to_json(const CbcStats& s);

/// `dim=<d> space=<fourier|cosine|chebyshev>` then `<index> <re> [<im>]`.
void write_coefficients(std::ostream& os, Space space, std::size_t dim, const CoefficientTable& c);
CoefficientTable read_coefficients(std::istream& is, Space* space_out = nullptr, std::size_t* dim_out = nullptr);

/// `n=<n>` then one value per line (`re im` when complex).
void write_values(std::ostream& os, const std::vector<cplx>& v, bool complex);
std::vector<cplx> read_values(std::istream& is);

IndexSet load_index_set(const std::string& path);
void save_index_set(const std::string& path, const IndexSet& L);

}  // namespace latrec
