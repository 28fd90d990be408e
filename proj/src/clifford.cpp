#include "eqb/clifford.hpp"

#include <cmath>

namespace eqb {

namespace {

int base_dim(CliffordBase b) {
  switch (b) {
    case CliffordBase::R: return 1;
    case CliffordBase::C: return 2;
    case CliffordBase::H: return 4;
    case CliffordBase::RR: return 2;
    case CliffordBase::HH: return 8;
  }
  return 0;
}

}  // namespace

CliffordType clifford_type(int p, int q) {
  if (p < 0 || q < 0 || p > 16 || q > 16)
    throw Error(ErrorCode::domain, "signature out of supported range");

  // Eight-periodic type by [p-q] mod 8; the total real dimension 2^(p+q)
  // then fixes the matrix size.
  static const CliffordBase by_mod8[8] = {
      CliffordBase::R,  CliffordBase::RR, CliffordBase::R,  CliffordBase::C,
      CliffordBase::H,  CliffordBase::HH, CliffordBase::H,  CliffordBase::C};
  int m = ((p - q) % 8 + 8) % 8;
  CliffordBase base = by_mod8[m];

  long long dim = 1LL << (p + q);
  long long unit = base_dim(base);
  long long n_sq = dim / unit;
  int n = (int)std::llround(std::sqrt((double)n_sq));
  if ((long long)n * n != n_sq)
    throw Error(ErrorCode::internal, "matrix size is not a perfect square");
  return CliffordType{base, n, p, q};
}

bool has_unique_odd_irrep(int p, int q) {
  int m = ((p - q) % 8 + 8) % 8;
  return m != 1 && m != 5;
}

std::vector<std::pair<int, int>> odd_irrep_profile(int p, int q) {
  if (p + q > 6)
    throw Error(ErrorCode::domain, "profile limited to p+q <= 6");
  CliffordType t = clifford_type(p, q);
  // Simple modules of M_N(D) are D^N; for a two-factor algebra there are two
  // of them.  The monomial group spans the algebra, so group commutants
  // coincide with module commutants.
  int copies = t.simple() ? 1 : 2;
  int d;
  switch (t.base) {
    case CliffordBase::R:
    case CliffordBase::RR: d = 1; break;
    case CliffordBase::C: d = 2; break;
    default: d = 4; break;
  }
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < copies; ++i) out.emplace_back(t.matrix_size * d, d);
  return out;
}

std::string clifford_base_name(CliffordBase b) {
  switch (b) {
    case CliffordBase::R: return "R";
    case CliffordBase::C: return "C";
    case CliffordBase::H: return "H";
    case CliffordBase::RR: return "R+R";
    case CliffordBase::HH: return "H+H";
  }
  return "?";
}

}  // namespace eqb
