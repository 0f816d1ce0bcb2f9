#pragma once

#include "tqft.hpp"

#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

namespace skein {

// ---------------------------------------------------------------------------
// Ring text: grade-0 elements print as their reduced Laurent form; the level travels alongside.

inline std::string ring_text(const CycloElem& x) {
  if (x.grade() != 0) return x.str();
  return x.to_laurent().str();
}

inline CycloElem parse_ring_text(const std::string& s, int p) {
  if (s.find("kappa") != std::string::npos) return CycloElem::parse(s);
  return CycloElem(p, LaurentPoly::parse(s));
}

inline std::string ring_text(const LaurentPoly& x) { return x.str(); }
inline std::string ring_text(const RatFunc& x) { return x.str(); }

// Polynomial in x, highest power first, e.g. "x^2 + (-1 - A^2 + A^3)*x + 1".
template <class R>
std::string poly_text(const RingPoly<R>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int k = f.degree(); k >= 0; --k) {
    R c = f.coeff(k);
    if (is_zero(c)) continue;
    std::string cs = ring_text(c);
    bool one = cs == "1", minus_one = cs == "-1";
    bool atom = cs.find_first_of(" ") == std::string::npos;
    std::string mono = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
    std::string term;
    bool neg = false;
    if (k == 0) {
      term = cs;
      if (atom && cs[0] == '-') {
        neg = true;
        term = cs.substr(1);
      } else if (!atom) {
        term = "(" + cs + ")";
      }
    } else if (one) {
      term = mono;
    } else if (minus_one) {
      neg = true;
      term = mono;
    } else if (atom) {
      if (cs[0] == '-') {
        neg = true;
        cs = cs.substr(1);
      }
      term = cs + "*" + mono;
    } else {
      term = "(" + cs + ")*" + mono;
    }
    if (out.empty())
      out = neg ? "-" + term : term;
    else
      out += neg ? " - " + term : " + " + term;
  }
  return out;
}

template <class R>
nlohmann::json matrix_json(const Matrix<R>& m) {
  nlohmann::json a = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(ring_text(m(i, j)));
    a.push_back(row);
  }
  return a;
}

template <class R>
nlohmann::json poly_json(const RingPoly<R>& f) {
  nlohmann::json a = nlohmann::json::array();
  for (int k = 0; k <= f.degree(); ++k) {
    R c = f.coeff(k);
    if (is_zero(c)) continue;
    a.push_back({{"xExp", k}, {"coeff", ring_text(c)}});
  }
  return a;
}

inline nlohmann::json complex_json(const std::vector<std::complex<double>>& v) {
  nlohmann::json a = nlohmann::json::array();
  auto clean = [](double x) { return std::abs(x) < 1e-12 ? 0.0 : x; };
  for (auto& z : v) a.push_back({{"re", clean(z.real())}, {"im", clean(z.imag())}});
  return a;
}

inline nlohmann::json to_json(const TVInvariant<CycloElem>& z) {
  nlohmann::json j;
  j["p"] = z.p;
  j["gamma"] = poly_json(z.gamma);
  j["D"] = ring_text(z.D);
  j["flatRank"] = z.flat_rank;
  j["matrix"] = matrix_json(z.flat);
  j["eigen"] = complex_json(z.eigen);
  j["period"] = z.period ? nlohmann::json(*z.period) : nlohmann::json(nullptr);
  return j;
}

// Inverse of to_json for the exact fields.
struct InvariantRecord {
  int p = 0;
  RingPoly<CycloElem> gamma;
  CycloElem D;
  std::size_t flat_rank = 0;
  Matrix<CycloElem> matrix;
  std::optional<long> period;
};

inline InvariantRecord invariant_from_json(const nlohmann::json& j) {
  InvariantRecord r;
  r.p = j.at("p").get<int>();
  int deg = -1;
  for (auto& t : j.at("gamma")) deg = std::max(deg, t.at("xExp").get<int>());
  std::vector<CycloElem> c(static_cast<std::size_t>(deg + 1), CycloElem(0));
  for (auto& t : j.at("gamma"))
    c[static_cast<std::size_t>(t.at("xExp").get<int>())] = parse_ring_text(t.at("coeff").get<std::string>(), r.p);
  r.gamma = RingPoly<CycloElem>(std::move(c));
  r.D = parse_ring_text(j.at("D").get<std::string>(), r.p);
  r.flat_rank = j.at("flatRank").get<std::size_t>();
  const auto& m = j.at("matrix");
  r.matrix = Matrix<CycloElem>(m.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t k = 0; k < m[i].size(); ++k) r.matrix(i, k) = parse_ring_text(m[i][k].get<std::string>(), r.p);
  if (!j.at("period").is_null()) r.period = j.at("period").get<long>();
  return r;
}

inline std::string complex_text(std::complex<double> z) {
  std::ostringstream os;
  os << std::setprecision(12) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

inline std::string to_text(const TVInvariant<CycloElem>& z) {
  std::ostringstream os;
  os << "p = " << z.p << "\n";
  os << "gamma = " << poly_text(z.gamma) << "\n";
  os << "D = " << ring_text(z.D) << "\n";
  os << "flat rank = " << z.flat_rank << "\n";
  os << "matrix = " << z.flat.map([](const CycloElem& x) { return x.to_laurent(); }).str() << "\n";
  os << "eigenvalues =";
  for (auto& e : z.eigen) os << " [" << complex_text(e) << "]";
  os << "\n";
  os << "period = " << (z.period ? std::to_string(*z.period) : std::string("none")) << "\n";
  return os.str();
}

inline nlohmann::json to_json(const TangleInvariant& t) {
  nlohmann::json j;
  j["n"] = t.n;
  j["Q"] = matrix_json(t.Q);
  j["B"] = matrix_json(t.B);
  j["gamma"] = poly_json(t.gamma);
  j["D"] = t.D.str();
  j["trace"] = t.trace.str();
  j["flatRank"] = t.flat_rank;
  j["wrapping"] = t.wrapping ? nlohmann::json(*t.wrapping) : nlohmann::json(nullptr);
  j["wrappingLowerBound"] = t.wrapping_lower_bound;
  if (t.specialized) j["specialized"] = to_json(*t.specialized);
  return j;
}

inline std::string to_text(const TangleInvariant& t) {
  std::ostringstream os;
  os << "n = " << t.n << "\n";
  os << "Q = " << t.Q.str() << "\n";
  os << "B = " << t.B.str() << "\n";
  os << "D(L) = " << t.D.str() << "\n";
  os << "gamma(L) = " << poly_text(t.gamma) << "\n";
  os << "trace = " << t.trace.str() << "\n";
  os << "wrapping = " << (t.wrapping ? std::to_string(*t.wrapping) : std::string("unknown")) << "\n";
  os << "wrapping lower bound = " << t.wrapping_lower_bound << "\n";
  if (t.specialized) os << to_text(*t.specialized);
  return os.str();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace skein
