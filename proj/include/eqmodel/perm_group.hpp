#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eqmodel {

/// Base class for every error the library reports on bad input.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class UnknownGroupError : public Error
{
public:
  using Error::Error;
};

class ParseError : public Error
{
public:
  using Error::Error;
};

class TruncationError : public Error
{
public:
  using Error::Error;
};

/// A bijection of {0, ..., degree-1}, stored as its image list.
class Permutation
{
public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t degree);
  /// Cycles use 1-based points, as in the usual (1 2 3) notation.
  static Permutation from_cycles(std::size_t degree,
                                 std::vector<std::vector<std::size_t>> const &cycles);

  std::size_t degree() const { return images_.size(); }
  std::size_t operator()(std::size_t point) const { return images_.at(point); }
  std::vector<std::size_t> const &images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  /// Composite a∘b: b is applied first.
  friend Permutation operator*(Permutation const &a, Permutation const &b);
  friend auto operator<=>(Permutation const &, Permutation const &) = default;
  friend bool operator==(Permutation const &, Permutation const &) = default;

  std::string to_string() const;

private:
  std::vector<std::size_t> images_;
};

/// A finite permutation group with all of its elements enumerated.
///
/// Elements are sorted lexicographically by image list, so the identity is
/// always element 0. Element indices are the currency of every downstream
/// computation; `multiply(a, b)` is the index of element(a)∘element(b).
class FiniteGroup
{
public:
  static constexpr std::size_t kDefaultOrderBound = 10000;
  static constexpr std::size_t kIdentity = 0;
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  /// One step of the fixed factorization: element = generator ∘ parent.
  struct Step
  {
    std::size_t parent;
    std::size_t generator;
  };

  static FiniteGroup from_generators(std::size_t degree, std::vector<Permutation> generators,
                                     std::size_t order_bound = kDefaultOrderBound);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }

  std::vector<Permutation> const &generators() const { return generators_; }
  /// Element index of each generator.
  std::vector<std::size_t> const &generator_indices() const { return generator_indices_; }

  std::vector<Permutation> const &elements() const { return elements_; }
  Permutation const &element(std::size_t index) const { return elements_.at(index); }

  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;
  std::size_t identity() const { return kIdentity; }

  std::optional<std::size_t> find(Permutation const &p) const;
  std::size_t index_of(Permutation const &p) const;

  /// Breadth-first factorization over the generators; step(0) is the root.
  Step const &step(std::size_t element) const { return steps_.at(element); }
  /// Elements in breadth-first order, so parents precede children.
  std::vector<std::size_t> const &bfs_order() const { return bfs_order_; }
  /// Generator indices w with element = gen[w0] ∘ gen[w1] ∘ ... .
  std::vector<std::size_t> word(std::size_t element) const;

  bool is_abelian() const;

  friend bool operator==(FiniteGroup const &a, FiniteGroup const &b)
  {
    return a.degree_ == b.degree_ && a.generators_ == b.generators_ &&
           a.elements_ == b.elements_;
  }

private:
  FiniteGroup() = default;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<std::size_t> generator_indices_;
  std::vector<Permutation> elements_;
  std::vector<std::uint32_t> cayley_;
  std::vector<std::size_t> inverses_;
  std::vector<Step> steps_;
  std::vector<std::size_t> bfs_order_;
};

using GroupPtr = std::shared_ptr<FiniteGroup const>;

GroupPtr make_group(FiniteGroup group);

/// cyclic-n, dihedral-2n, symmetric-n (n <= 5), alternating-4, klein-4,
/// quaternion-8. Throws UnknownGroupError otherwise.
FiniteGroup named_group(std::string_view name);

/// The names exercised by the lemma suite.
std::vector<std::string> const &corpus_group_names();

}  // namespace eqmodel
