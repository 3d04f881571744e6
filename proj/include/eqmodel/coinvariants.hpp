#pragma once

#include <functional>
#include <vector>

#include "eqmodel/chain_complex.hpp"

namespace eqmodel {

/// A finite group K acting on R ⊗ Q[S]: by chain automorphisms on R and by
/// permuting the finite point set S. Elements are numbered 0..order-1 with 0
/// the identity.
struct ProductAction
{
  std::size_t order = 1;
  std::function<std::size_t(std::size_t)> inverse;
  std::function<std::size_t(std::size_t k, std::size_t s)> on_point;
  /// k·r for r in the global basis of R.
  std::function<SparseVec(std::size_t k, SparseVec const &r)> on_vector;
};

/// (R ⊗ Q[S])_K computed orbit by orbit: one copy of R_{Stab(s)} per K-orbit
/// of points. This is how coends over a category with a group-like generating
/// object are evaluated without ever forming R ⊗ Q[S].
class OrbitCoinvariants
{
public:
  OrbitCoinvariants(ChainComplex r, std::size_t points, ProductAction action);

  /// Over the trivial group.
  ChainComplex const &complex() const { return complex_; }
  std::size_t orbit_count() const { return orbits_.size(); }
  std::size_t orbit_of(std::size_t s) const { return point_orbit_[s]; }
  std::size_t orbit_rep(std::size_t o) const { return orbits_[o].rep; }
  std::size_t stabilizer_order(std::size_t o) const { return orbits_[o].stabilizer.size(); }

  /// Class of r ⊗ s.
  SparseVec project(SparseVec const &r, std::size_t s) const;
  /// Basis vector b is the class of r ⊗ orbit_rep(o).
  std::pair<std::size_t, SparseVec> representative(std::size_t b) const;

private:
  struct Orbit
  {
    std::size_t rep = 0;
    std::vector<std::size_t> stabilizer;
    std::map<int, Cokernel> quotient;  // R_n -> (R_n)_Stab
  };

  ChainComplex r_;
  ProductAction action_;
  std::vector<Orbit> orbits_;
  std::vector<std::size_t> point_orbit_;
  std::vector<std::size_t> transversal_;  // k with k·rep = s
  std::map<std::pair<int, std::size_t>, std::size_t> offset_;  // (degree, orbit) -> offset in degree
  ChainComplex complex_;
};

}  // namespace eqmodel
