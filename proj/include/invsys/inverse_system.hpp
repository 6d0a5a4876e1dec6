#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "invsys/linalg.hpp"
#include "invsys/poly.hpp"

namespace invsys {

// h-vector (h_0, ..., h_d) of an Artinian graded algebra with socle degree d.
struct HilbertData {
  std::uint64_t socle_degree = 0;
  std::vector<std::size_t> h_vector;

  bool is_palindromic() const;
  std::size_t total_dimension() const;
  // h_t, zero outside [0, d].
  std::size_t at(std::int64_t t) const;
};

// A homogeneous ideal given by generators, with a write-once cache of
// degreewise dimensions dim_K I_t.
class GradedIdealPresentation {
 public:
  GradedIdealPresentation(FieldSpec field, std::size_t nvars, std::vector<Polynomial> generators);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  // Number of generators; equals mu(I) when the presentation is minimal.
  std::size_t mu() const noexcept { return generators_.size(); }
  std::vector<std::uint64_t> generator_degrees() const;  // ascending

  // dim_K I_t, computed on first use and cached.
  std::size_t dimension_in_degree(std::uint64_t t) const;
  void record_dimension(std::uint64_t t, std::size_t dim) const;
  std::map<std::uint64_t, std::size_t> degreewise_dims() const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<std::uint64_t, std::size_t> dims;
  };

  FieldSpec field_;
  std::size_t nvars_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// R/I worked degree by degree. Coordinates in degree t are the standard
// monomials of the monomial generators of I; multiples of the remaining
// generators become an echelon basis of relations over those coordinates.
// Pieces are built lazily, so one instance must not be shared across threads.
class GradedQuotient {
 public:
  explicit GradedQuotient(const GradedIdealPresentation& ideal);

  struct Piece {
    std::vector<ExponentVector> standard;  // decreasing lex
    std::unordered_map<ExponentVector, std::size_t, ExponentVectorHash> index;
    EchelonBasis relations;
  };

  const Piece& piece(std::uint64_t t) const;
  // dim_K (R/I)_t
  std::size_t dim(std::uint64_t t) const;
  // dim_K I_t
  std::size_t ideal_dim(std::uint64_t t) const;
  // Canonical coordinates of the class of a homogeneous f of degree t.
  SparseVector normal_form(const Polynomial& f, std::uint64_t t) const;

  // Throws NotArtinian unless (R/I)_t vanishes for some t; the search stops
  // at nvars * (max generator degree - 1) + 1, past which an Artinian
  // quotient is always zero.
  HilbertData hilbert_data() const;

  const GradedIdealPresentation& ideal() const noexcept { return ideal_; }

 private:
  GradedIdealPresentation ideal_;
  std::vector<ExponentVector> monomial_gens_;
  std::vector<Polynomial> other_gens_;
  std::vector<std::uint64_t> pure_power_bound_;
  mutable std::map<std::uint64_t, std::unique_ptr<Piece>> pieces_;
};

struct AnnihilatorDegree {
  // t > deg F: every form of degree t annihilates F.
  bool full_space = false;
  std::vector<Polynomial> basis;
};

// Canonical basis of {f in R_t : f o F = 0}.
AnnihilatorDegree annihilator_in_degree(const Polynomial& F, std::uint64_t t);

HilbertData hilbert_function(const Polynomial& F);

// Monomials dividing some term of F, grouped by degree 0..deg F, each group in
// decreasing lex order. Every other monomial contracts F to zero.
std::vector<std::vector<ExponentVector>> divisors_by_degree(const Polynomial& F);

// Minimal generators of Ann_R(F) found degree by degree up to t_max
// (default deg F + 1, which is complete for Artinian Gorenstein quotients).
GradedIdealPresentation minimal_generators(const Polynomial& F,
                                           std::optional<std::uint64_t> t_max = std::nullopt);

struct CompleteIntersectionVerdict {
  bool is_ci = false;
  // Codimension after dropping variables absent from F.
  std::size_t codimension = 0;
  std::vector<std::size_t> kept_variables;
  std::vector<std::size_t> dropped_variables;
  // Minimal generators of Ann(F) in the ring of the kept variables.
  GradedIdealPresentation ideal;
};

CompleteIntersectionVerdict is_complete_intersection_oracle(const Polynomial& F);

// J == Ann_R(F): every generator kills F and dim J_t == dim Ann(F)_t for
// t <= deg F + 1.
bool ideal_equals_annihilator(const GradedIdealPresentation& J, const Polynomial& F);

std::size_t socle_dimension(const Polynomial& F);
// dim_K (0 : m) of R/I for an Artinian presentation.
std::size_t socle_dimension(const GradedIdealPresentation& I);

}  // namespace invsys
