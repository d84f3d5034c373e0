#pragma once

#include <random>
#include <vector>

#include "chevalley/group.hpp"
#include "chevalley/weyl.hpp"

namespace chev {

/// x = u' h n_w u with u' in U, h in H, u supported on the inversion set of w.
/// The torus part is recorded by its eigenvalues on u_{S_1}..u_{S_m}, which
/// determine h as a matrix.
struct BruhatForm {
  UWord u_prime;
  std::vector<Scalar> torus;
  std::vector<int> weyl_word;
  UWord u_minus;
  bool operator==(const BruhatForm&) const = default;
};

/// Right-multiplication state machine for the normal form.
class BruhatBuilder {
 public:
  explicit BruhatBuilder(const Group& g, std::mt19937_64* rng = nullptr);
  BruhatBuilder(const Group& g, const BruhatForm& start, std::mt19937_64* rng = nullptr);

  void mul_atom(const WordAtom& a);
  void mul_E(int root, const Scalar& t);
  void mul_U(const UWord& v);
  void mul_h(int root, const Scalar& t);
  /// Right-multiply by the torus element with the given eigenvalues on the simple root lines.
  void mul_torus(const std::vector<Scalar>& chi);
  /// Right-multiply by n_{S_i}(1).
  void mul_n(int i);
  void mul_form(const BruhatForm& f);

  BruhatForm form() const;
  const WeylElement& weyl() const { return w_; }

 private:
  Scalar character(const std::vector<Scalar>& chi, const RootVec& gamma) const;
  UFactor conj_nw(UFactor f) const;
  UWord normalize(const UWord& v) const { return normalize_u(g_, v, rng_); }

  const Group& g_;
  std::mt19937_64* rng_;
  UWord up_;
  std::vector<Scalar> chi_;
  WeylElement w_;
  UWord u_;
};

enum class BruhatStrategy { sequential, divide };

/// Normal form of the product of a word; with `certify` the reassembled matrix is compared to the word.
BruhatForm bruhat(const Group& g, const Word& w, BruhatStrategy strategy = BruhatStrategy::sequential,
                  std::mt19937_64* rng = nullptr, bool certify = true);
Matrix torus_matrix(const Group& g, const std::vector<Scalar>& chi);
Matrix weyl_matrix(const Group& g, const std::vector<int>& word);
Matrix reassemble(const Group& g, const BruhatForm& f);
/// Every u_minus root is an inversion of w (and u_minus is in canonical order).
bool u_minus_supported(const Group& g, const BruhatForm& f);

/// g in P_J iff every letter of its reduced Weyl word lies in J.
bool parabolic_membership(const Group& g, const Word& w, const std::vector<int>& J);

/// Random word of E, h and n atoms.
Word random_word(const Group& g, std::size_t length, std::mt19937_64& rng);

}  // namespace chev
