#pragma once

#include <cstdint>
#include <vector>

#include "locoh/monomial.hpp"
#include "locoh/varset.hpp"

namespace locoh {

/// Simplicial complex on a fixed vertex universe, stored by its maximal
/// facets. Two distinct degenerate cases are kept apart:
///   - the void complex, which has no faces at all, and
///   - the empty complex {∅}, which has exactly the empty face.
/// Faces are never enumerated eagerly; membership is a facet-containment
/// test and per-cardinality enumeration walks facet subsets.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  static SimplicialComplex void_complex(int universe) {
    SimplicialComplex k;
    k.n_ = universe;
    k.void_ = true;
    return k;
  }

  static SimplicialComplex empty_complex(int universe) {
    return from_facets(universe, {VarSet(universe)});
  }

  static SimplicialComplex full_simplex(int universe) {
    return from_facets(universe, {VarSet::full(universe)});
  }

  /// Downward closure of the given sets; only the inclusion-maximal ones are
  /// kept. An empty list yields the void complex.
  static SimplicialComplex from_facets(int universe, std::vector<VarSet> facets);

  int universe_size() const { return n_; }
  bool is_void() const { return void_; }
  bool is_empty_complex() const { return !void_ && facets_.size() == 1 && facets_.front().empty(); }
  const std::vector<VarSet>& facets() const { return facets_; }

  /// Largest face cardinality; -1 for the void complex, 0 for {∅}.
  int max_face_card() const;

  /// Face membership (the void complex has no faces, not even ∅).
  bool contains_face(const VarSet& face) const;

  /// All faces with exactly `card` vertices, in canonical face-lex order.
  std::vector<VarSet> faces_with_card(int card) const;

  /// True iff every face of *this is a face of `other` (void ⊆ anything).
  bool subcomplex_of(const SimplicialComplex& other) const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  int n_ = 0;
  bool void_ = false;
  std::vector<VarSet> facets_;  // inclusion-maximal, face-lex sorted
};

/// The complex Δ of a squarefree nonzero ideal: F is a face iff the product
/// of the variables outside F lies in the ideal. Its facets are the
/// complements of the generator supports; under the Stanley–Reisner
/// correspondence it is the complex of alexander_dual(ideal).
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal);

/// Full subcomplex on a vertex subset: faces of `complex` contained in
/// `support`. By convention the empty support yields the void complex.
SimplicialComplex full_subcomplex(const SimplicialComplex& complex, const VarSet& support);

/// Complex on the generator indices {0..r-1} of a squarefree ideal: a set J
/// of generators is a face iff lcm{m_j | j in J} misses at least one
/// variable of `support`. Void when `support` is empty.
SimplicialComplex generator_complex(const MonomialIdeal& ideal, const VarSet& support);

/// Complex on the variables of an arbitrary nonzero monomial ideal: J is a
/// face iff some minimal generator g has (alpha + deg g) strictly negative
/// on all of J. Void iff alpha >= 0 coordinatewise.
SimplicialComplex negative_support_complex(const MonomialIdeal& ideal, const MultiDegree& alpha);

}  // namespace locoh
