#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace implode {

using Int = long long;

// Exact rational scalar for central weight components and cone heights.
// Kept deliberately small: the combinatorial core never needs big numerators.
struct Rational {
  Int num = 0;
  Int den = 1;

  Rational() = default;
  Rational(Int n) : num(n), den(1) {}
  Rational(Int n, Int d);

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator-() const { return {-num, den}; }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  std::string str() const;
};

// Weight in fundamental-weight coordinates of the semisimple part plus an
// optional exact central component.  All pairings with coroots are integers.
struct Weight {
  std::vector<Int> fund;
  std::vector<Rational> central;

  Weight() = default;
  explicit Weight(std::vector<Int> f) : fund(std::move(f)) {}
  Weight(std::initializer_list<Int> f) : fund(f) {}

  std::size_t rank() const { return fund.size(); }
  bool is_zero() const;
  bool is_dominant() const;
  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  bool operator==(const Weight& o) const;
  bool operator<(const Weight& o) const;  // lexicographic; canonical map order
};

// A positive root, carried both as a vector over the simple roots and as the
// integer pairing functional of its coroot on fundamental coordinates.
struct Root {
  Eigen::VectorXi simple_coords;   // alpha = sum_i c_i alpha_i
  Eigen::VectorXi coroot_on_fund;  // <lambda, alpha^vee> = coroot_on_fund . lambda
  Int half_norm = 1;               // (alpha,alpha)/2 in the minimal integer normalization
};

enum class Isogeny { SimplyConnected, Adjoint };

// A root datum: Cartan matrix of the semisimple part, simple coroots in a
// basis of the cocharacter lattice, fundamental weights in a basis of the
// character lattice, and the rank of the central torus.
class RootDatum {
 public:
  // Standard construction from a series letter and rank.
  static RootDatum simple(char series, int rank, Isogeny isogeny,
                          std::string name = "");
  static RootDatum torus(int rank, std::string name = "");
  static RootDatum custom(std::string name, Eigen::MatrixXi cartan,
                          Eigen::MatrixXi coroot_coords,
                          Eigen::MatrixXi weight_coords, int central_rank);

  const std::string& name() const { return name_; }
  int rank_ss() const { return rank_ss_; }
  int central_rank() const { return central_rank_; }
  int cochar_dim() const { return static_cast<int>(coroot_coords_.cols()); }
  const Eigen::MatrixXi& cartan() const { return cartan_; }
  const Eigen::MatrixXi& coroot_coords() const { return coroot_coords_; }
  const Eigen::MatrixXi& weight_coords() const { return weight_coords_; }
  const std::vector<Int>& symmetrizers() const { return symmetrizers_; }

  // True iff the datum is semisimple with cocharacter lattice equal to the
  // coroot lattice.
  bool is_simply_connected_semisimple() const;
  bool is_torus() const { return rank_ss_ == 0; }

  const std::vector<Root>& positive_roots() const { return positive_roots_; }

  Weight rho() const;
  Int pairing(const Weight& w, const Root& alpha) const;
  Int simple_pairing(const Weight& w, int i) const;

  // Reflection in the i-th simple root, acting on fundamental coordinates.
  Weight simple_reflection(const Weight& w, int i) const;

  Int weyl_dimension(const Weight& lambda) const;
  std::map<Weight, Int> weight_multiplicities(const Weight& lambda) const;

  // Order of [X_* cap spanQ(S^vee)] / Zspan(S^vee), computed by Smith normal
  // form of the selected coroot rows.  1 means the Levi derived group of the
  // face with vanishing set S is simply connected.
  Int levi_fundamental_group_order(const std::vector<int>& vanishing_set) const;

  // Dominant representative of the rho-shifted dot action.  sign is the Weyl
  // determinant; singular means some pairing of w with a simple coroot is 0
  // along the way (w fixed by a reflection).
  struct DominantForm {
    Weight weight;
    int sign = 1;
    bool singular = false;
  };
  DominantForm dominantize(const Weight& w, std::size_t cap = kDefaultWeylCap) const;

  // Full Weyl orbit of a weight, generated by reflection words.  Throws if
  // the orbit would exceed the cap.
  std::vector<Weight> weyl_orbit(const Weight& w,
                                 std::size_t cap = kDefaultWeylCap) const;

  static constexpr std::size_t kDefaultWeylCap = 1000000;

 private:
  RootDatum() = default;
  void finalize();  // validates invariants, computes roots and symmetrizers

  std::string name_;
  int rank_ss_ = 0;
  int central_rank_ = 0;
  Eigen::MatrixXi cartan_;
  Eigen::MatrixXi coroot_coords_;
  Eigen::MatrixXi weight_coords_;
  std::vector<Int> symmetrizers_;
  std::vector<Root> positive_roots_;
};

// Smith normal form diagonal of an integer matrix (nonnegative, divisibility
// chain d1 | d2 | ...).
std::vector<Int> smith_normal_form_diagonal(Eigen::MatrixXi m);

// Index of the row span of m inside its rational saturation in Z^cols.
Int lattice_saturation_index(const Eigen::MatrixXi& m);

}  // namespace implode
