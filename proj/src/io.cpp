#include "latrec/io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "latrec/errors.hpp"

namespace latrec {

namespace {

bool next_line(std::istream& is, std::string& line) {
  while (std::getline(is, line)) {
    const auto p = line.find_first_not_of(" \t\r");
    if (p == std::string::npos || line[p] == '#') continue;
    return true;
  }
  return false;
}

/// Value of `key=` in a header line.
std::string header_field(const std::string& line, const std::string& key) {
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok)
    if (tok.rfind(key + "=", 0) == 0) return tok.substr(key.size() + 1);
  throw ParseError("header '" + line + "' lacks " + key + "=");
}

long long parse_int(const std::string& s) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw ParseError("not an integer: '" + s + "'");
  }
  if (pos != s.size()) throw ParseError("not an integer: '" + s + "'");
  return v;
}

double parse_double(const std::string& s) {
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw ParseError("not a number: '" + s + "'");
  }
  if (pos != s.size()) throw ParseError("not a number: '" + s + "'");
  return v;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string t;
  while (ss >> t) out.push_back(t);
  return out;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_components(std::ostream& os, const MultiIndex& k) {
  for (std::size_t j = 0; j < k.dim(); ++j) os << (j ? " " : "") << k[j];
}

MultiIndex parse_index(const std::vector<std::string>& t, std::size_t first, std::size_t d) {
  MultiIndex k(d);
  for (std::size_t j = 0; j < d; ++j) k[j] = parse_int(t[first + j]);
  return k;
}

Rank1Lattice parse_lattice_line(const std::string& line) {
  const long long n = parse_int(header_field(line, "n"));
  std::vector<Index> z;
  std::istringstream zs(header_field(line, "z"));
  std::string part;
  while (std::getline(zs, part, ',')) z.push_back(parse_int(part));
  if (z.empty()) throw ParseError("empty generating vector");
  try {
    return Rank1Lattice(n, MultiIndex(std::move(z)));
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("invalid lattice: ") + e.what());
  }
}

}  // namespace

void write_index_set(std::ostream& os, const IndexSet& L) {
  os << "dim=" << L.dim() << " domain=" << to_string(L.domain()) << '\n';
  for (const auto& k : L) {
    write_components(os, k);
    os << '\n';
  }
}

IndexSet read_index_set(std::istream& is) {
  std::string line;
  if (!next_line(is, line)) throw ParseError("index set file is empty");
  const long long d = parse_int(header_field(line, "dim"));
  if (d < 1) throw ParseError("dimension must be >= 1");
  const Domain dom = domain_from_string(header_field(line, "domain"));
  std::vector<MultiIndex> idx;
  while (next_line(is, line)) {
    const auto t = tokens(line);
    if (t.size() != static_cast<std::size_t>(d))
      throw ParseError("index line '" + line + "' does not have " + std::to_string(d) + " entries");
    idx.push_back(parse_index(t, 0, static_cast<std::size_t>(d)));
  }
  try {
    return IndexSet(static_cast<std::size_t>(d), dom, std::move(idx));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

void write_lattice(std::ostream& os, const Rank1Lattice& L) {
  os << "n=" << L.n() << " z=";
  for (std::size_t j = 0; j < L.dim(); ++j) os << (j ? "," : "") << L.z()[j];
  os << '\n';
}

Rank1Lattice read_lattice(std::istream& is) { return read_cbc_result(is, nullptr); }

void write_cbc_result(std::ostream& os, const Rank1Lattice& L, const CTable& c) {
  write_lattice(os, L);
  for (const auto& [k, v] : c) {
    os << "c: ";
    write_components(os, k);
    os << ' ' << v << '\n';
  }
}

Rank1Lattice read_cbc_result(std::istream& is, CTable* c_out) {
  std::string line;
  if (!next_line(is, line)) throw ParseError("lattice file is empty");
  Rank1Lattice L = parse_lattice_line(line);
  CTable c;
  while (next_line(is, line)) {
    auto t = tokens(line);
    if (t.empty() || t[0] != "c:") throw ParseError("unexpected line in lattice file: '" + line + "'");
    if (t.size() != L.dim() + 2) throw ParseError("c-table line '" + line + "' has wrong length");
    c[parse_index(t, 1, L.dim())] = static_cast<int>(parse_int(t.back()));
  }
  if (c_out) *c_out = std::move(c);
  return L;
}

nlohmann::json stats_to_json(const CbcStats& s) {
  nlohmann::json j;
  j["required_n"] = s.required_n;
  j["attempted_n"] = s.attempted_n;
  j["switch_step"] = s.switch_step ? nlohmann::json(*s.switch_step) : nlohmann::json(nullptr);
  j["reduced_from"] = s.reduced_from ? nlohmann::json(*s.reduced_from) : nlohmann::json(nullptr);
  j["verifier_visits"] = s.verifier_visits;
  j["steps"] = nlohmann::json::array();
  for (const auto& st : s.steps)
    j["steps"].push_back({{"step", st.step},
                          {"strategy", st.strategy},
                          {"n_fail", st.n_fail},
                          {"eliminated", st.eliminated},
                          {"survivors", st.survivors},
                          {"z", st.chosen}});
  return j;
}

void write_coefficients(std::ostream& os, Space space, std::size_t dim, const CoefficientTable& c) {
  os << "dim=" << dim << " space=" << to_string(space) << '\n';
  for (const auto& [k, v] : c) {
    write_components(os, k);
    os << ' ' << fmt(v.real());
    if (space == Space::fourier) os << ' ' << fmt(v.imag());
    os << '\n';
  }
}

CoefficientTable read_coefficients(std::istream& is, Space* space_out, std::size_t* dim_out) {
  std::string line;
  if (!next_line(is, line)) throw ParseError("coefficient file is empty");
  const long long d = parse_int(header_field(line, "dim"));
  if (d < 1) throw ParseError("dimension must be >= 1");
  const Space space = space_from_string(header_field(line, "space"));
  const auto du = static_cast<std::size_t>(d);
  CoefficientTable c;
  while (next_line(is, line)) {
    const auto t = tokens(line);
    if (t.size() != du + 1 && t.size() != du + 2)
      throw ParseError("coefficient line '" + line + "' has wrong length");
    const double re = parse_double(t[du]);
    const double im = t.size() == du + 2 ? parse_double(t[du + 1]) : 0.0;
    c[parse_index(t, 0, du)] = cplx(re, im);
  }
  if (space_out) *space_out = space;
  if (dim_out) *dim_out = du;
  return c;
}

void write_values(std::ostream& os, const std::vector<cplx>& v, bool complex) {
  os << "n=" << v.size() << '\n';
  for (const auto& x : v) {
    os << fmt(x.real());
    if (complex) os << ' ' << fmt(x.imag());
    os << '\n';
  }
}

std::vector<cplx> read_values(std::istream& is) {
  std::string line;
  if (!next_line(is, line)) throw ParseError("value file is empty");
  const long long n = parse_int(header_field(line, "n"));
  if (n < 1) throw ParseError("n must be positive");
  std::vector<cplx> v;
  while (next_line(is, line)) {
    const auto t = tokens(line);
    if (t.size() != 1 && t.size() != 2) throw ParseError("value line '" + line + "' has wrong length");
    v.emplace_back(parse_double(t[0]), t.size() == 2 ? parse_double(t[1]) : 0.0);
  }
  if (static_cast<long long>(v.size()) != n)
    throw ParseError("value file declares n=" + std::to_string(n) + " but has " + std::to_string(v.size()) +
                     " values");
  return v;
}

IndexSet load_index_set(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  return read_index_set(f);
}

void save_index_set(const std::string& path, const IndexSet& L) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path);
  write_index_set(f, L);
}

}  // namespace latrec
