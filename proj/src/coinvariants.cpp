#include "eqmodel/coinvariants.hpp"

#include <stdexcept>

namespace eqmodel {

OrbitCoinvariants::OrbitCoinvariants(ChainComplex r, std::size_t points, ProductAction action)
    : r_(std::move(r)), action_(std::move(action)), point_orbit_(points, FiniteGroup::kNone),
      transversal_(points, 0)
{
  for (std::size_t s = 0; s < points; ++s) {
    if (point_orbit_[s] != FiniteGroup::kNone)
      continue;
    Orbit orb;
    orb.rep = s;
    std::size_t id = orbits_.size();
    for (std::size_t k = 0; k < action_.order; ++k) {
      std::size_t t = action_.on_point(k, s);
      if (t == s)
        orb.stabilizer.push_back(k);
      if (point_orbit_[t] == FiniteGroup::kNone) {
        point_orbit_[t] = id;
        transversal_[t] = k;
      }
    }
    orbits_.push_back(std::move(orb));
  }

  if (r_.empty()) {
    complex_ = ChainComplex::zero(trivial_group());
    return;
  }

  // R_Stab = R / span{h·r - r}
  for (auto &orb : orbits_) {
    for (int n = r_.lo(); n <= r_.hi(); ++n) {
      std::size_t dim = r_.dim(n);
      std::vector<SparseVec> rel;
      for (auto h : orb.stabilizer) {
        if (h == 0)
          continue;
        for (std::size_t i = 0; i < dim; ++i) {
          SparseVec e = SparseVec::unit(r_.offset(n) + i);
          SparseVec moved = action_.on_vector(h, e).slice(r_.offset(n), dim);
          SparseVec d = moved - SparseVec::unit(i);
          if (!d.empty())
            rel.push_back(std::move(d));
        }
      }
      orb.quotient.emplace(n, cokernel_of_span(dim, rel));
    }
  }

  std::vector<std::size_t> dims;
  std::vector<Matrix> diffs;
  for (int n = r_.lo(); n <= r_.hi(); ++n) {
    std::size_t off = 0;
    for (std::size_t o = 0; o < orbits_.size(); ++o) {
      offset_[{n, o}] = off;
      off += orbits_[o].quotient.at(n).dim();
    }
    dims.push_back(off);
  }
  for (int n = r_.lo() + 1; n <= r_.hi(); ++n) {
    std::size_t rows = dims[static_cast<std::size_t>(n - 1 - r_.lo())];
    std::size_t cols = dims[static_cast<std::size_t>(n - r_.lo())];
    std::vector<SparseVec> columns;
    columns.reserve(cols);
    Matrix d = r_.differential(n);
    for (std::size_t o = 0; o < orbits_.size(); ++o) {
      auto const &qn = orbits_[o].quotient.at(n);
      auto const &qm = orbits_[o].quotient.at(n - 1);
      Matrix block = qm.quotient * d * qn.section;
      for (std::size_t j = 0; j < block.cols(); ++j)
        columns.push_back(block.column(j).shifted(offset_.at({n - 1, o})));
    }
    diffs.push_back(Matrix::from_columns(rows, std::move(columns)));
  }
  complex_ = ChainComplex::of_vector_spaces(r_.lo(), std::move(dims), std::move(diffs), false);
}

SparseVec OrbitCoinvariants::project(SparseVec const &r, std::size_t s) const
{
  if (r.empty() || complex_.empty())
    return {};
  std::size_t o = point_orbit_.at(s);
  SparseVec moved = action_.on_vector(action_.inverse(transversal_[s]), r);
  std::vector<SparseVec::Entry> out;
  for (int n = r_.lo(); n <= r_.hi(); ++n) {
    SparseVec part = moved.slice(r_.offset(n), r_.dim(n));
    if (part.empty())
      continue;
    SparseVec q = orbits_[o].quotient.at(n).quotient.apply(part);
    for (auto &e : q.shifted(complex_.offset(n) + offset_.at({n, o})))
      out.push_back(std::move(e));
  }
  return SparseVec::from_unsorted(std::move(out));
}

std::pair<std::size_t, SparseVec> OrbitCoinvariants::representative(std::size_t b) const
{
  int n = complex_.degree_of(b);
  std::size_t local = b - complex_.offset(n);
  for (std::size_t o = orbits_.size(); o-- > 0;) {
    std::size_t off = offset_.at({n, o});
    auto const &q = orbits_[o].quotient.at(n);
    if (q.dim() == 0 || local < off)
      continue;
    SparseVec r = q.section.column(local - off).shifted(r_.offset(n));
    return {o, std::move(r)};
  }
  throw std::logic_error("coinvariant basis index outside every orbit");
}

}  // namespace eqmodel
