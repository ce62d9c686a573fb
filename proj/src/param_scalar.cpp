#include "qshuffle/param_scalar.hpp"

#include <sstream>

namespace qsh {
namespace {

std::string poly_str(const BivPoly& p) {
  if (p.is_zero()) return "0*v^0*u^0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str() << "*v^" << e.v << "*u^" << e.u;
  }
  return os.str();
}

BivPoly poly_parse(const std::string& s) {
  BivPoly p;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find(" + ", pos);
    std::string term = s.substr(pos, next == std::string::npos ? next : next - pos);
    pos = next == std::string::npos ? s.size() : next + 3;

    Rat coeff(1);
    int32_t a = 0, b = 0;
    size_t tp = 0;
    bool saw_any = false;
    while (tp < term.size()) {
      size_t star = term.find('*', tp);
      std::string tok = term.substr(tp, star == std::string::npos ? star : star - tp);
      tp = star == std::string::npos ? term.size() : star + 1;
      if (tok.empty()) throw std::invalid_argument("empty factor in scalar term");
      saw_any = true;
      if (tok[0] == 'v' || tok[0] == 'u') {
        if (tok.size() < 3 || tok[1] != '^')
          throw std::invalid_argument("bad variable factor: " + tok);
        int32_t e = static_cast<int32_t>(std::stol(tok.substr(2)));
        (tok[0] == 'v' ? a : b) = e;
      } else {
        coeff = Rat(tok);
        coeff.canonicalize();
      }
    }
    if (!saw_any) throw std::invalid_argument("empty scalar term");
    p.add_term({a, b}, coeff);
  }
  return p;
}

}  // namespace

std::string ParamScalar::str() const {
  return poly_str(num_) + " / " + poly_str(den_);
}

ParamScalar ParamScalar::parse(const std::string& text) {
  size_t slash = text.find(" / ");
  if (slash == std::string::npos) return ParamScalar(poly_parse(text), BivPoly::constant(Rat(1)));
  return ParamScalar(poly_parse(text.substr(0, slash)), poly_parse(text.substr(slash + 3)));
}

}  // namespace qsh
