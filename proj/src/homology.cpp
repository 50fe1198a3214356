#include "relcx/homology.hpp"

namespace relcx {

HomologyProfile HomologyProfile::trimmed() const {
  HomologyProfile out = *this;
  while (!out.betti.empty() && out.betti.back() == 0 && out.torsion.back().empty()) {
    out.betti.pop_back();
    out.torsion.pop_back();
  }
  return out;
}

HomologyProfile homology(const SimplicialComplex& complex) {
  HomologyProfile profile;
  if (complex.empty()) return profile;

  const auto f = complex.f_vector();
  const std::size_t top = f.size();
  // rank[n] = rank of ∂_n, with ∂_0 = 0 and ∂_{dim+1} = 0.
  std::vector<std::size_t> rank(top + 1, 0);
  profile.torsion.assign(top, {});
  auto boundaries = boundary_matrices<BigInt>(complex);
  for (std::size_t n = 1; n < top; ++n) {
    auto factors = smith_normal_form(std::move(boundaries[n - 1]));
    rank[n] = factors.size();
    for (auto& d : factors)
      if (d > 1) profile.torsion[n - 1].push_back(std::move(d));
  }
  profile.betti.resize(top);
  for (std::size_t n = 0; n < top; ++n) profile.betti[n] = f[n] - rank[n] - rank[n + 1];
  return profile;
}

bool same_homology(const SimplicialComplex& a, const SimplicialComplex& b) {
  return homology(a).trimmed() == homology(b).trimmed();
}

long long euler_characteristic(const HomologyProfile& profile) {
  long long chi = 0;
  for (std::size_t n = 0; n < profile.betti.size(); ++n)
    chi += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(profile.betti[n]);
  return chi;
}

}  // namespace relcx
