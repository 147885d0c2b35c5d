#pragma once

#include <Eigen/Core>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include "swarmmap/errors.hpp"

namespace swarmmap {

using Real = double;

// All grids are dense row-major Eigen arrays so that raster order (row by
// row, as in the file formats) is also memory order.
template <class Scalar>
using GridArray =
    Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using GreyArray = GridArray<std::uint8_t>;
using FieldArray = GridArray<Real>;
using MaskArray = GridArray<bool>;

inline int wrap_index(long i, int n) {
  long m = i % n;
  return static_cast<int>(m < 0 ? m + n : m);
}

// Immutable grey-level image the colony moves on. Toroidal: every access
// that may leave the grid goes through at_wrapped().
class Habitat {
 public:
  explicit Habitat(GreyArray grey) : grey_(std::move(grey)) {
    if (grey_.rows() < 3 || grey_.cols() < 3)
      throw DomainError("habitat must be at least 3x3, got " +
                        std::to_string(grey_.cols()) + "x" +
                        std::to_string(grey_.rows()));
  }

  static Habitat constant(int width, int height, std::uint8_t grey) {
    return Habitat(GreyArray::Constant(height, width, grey));
  }

  int width() const { return static_cast<int>(grey_.cols()); }
  int height() const { return static_cast<int>(grey_.rows()); }

  std::uint8_t at(int row, int col) const { return grey_(row, col); }
  std::uint8_t at_wrapped(long row, long col) const {
    return grey_(wrap_index(row, height()), wrap_index(col, width()));
  }

  const GreyArray& grey() const { return grey_; }

  friend bool operator==(const Habitat& a, const Habitat& b) {
    return a.grey_.rows() == b.grey_.rows() &&
           a.grey_.cols() == b.grey_.cols() && (a.grey_ == b.grey_).all();
  }

 private:
  GreyArray grey_;
};

// Mutable pheromone density sigma over the same lattice. Non-negative and
// finite everywhere; constructors validate, the engine preserves.
class PheromoneField {
 public:
  PheromoneField(int width, int height)
      : sigma_(FieldArray::Zero(height, width)) {
    if (width < 1 || height < 1)
      throw DomainError("pheromone field dimensions must be positive");
  }

  explicit PheromoneField(FieldArray sigma) : sigma_(std::move(sigma)) {
    if (sigma_.size() == 0)
      throw DomainError("pheromone field dimensions must be positive");
    if (!sigma_.isFinite().all() || (sigma_ < 0.0).any())
      throw DomainError("pheromone densities must be finite and >= 0");
  }

  int width() const { return static_cast<int>(sigma_.cols()); }
  int height() const { return static_cast<int>(sigma_.rows()); }

  Real at(int row, int col) const { return sigma_(row, col); }
  Real at_wrapped(long row, long col) const {
    return sigma_(wrap_index(row, height()), wrap_index(col, width()));
  }
  Real& cell(int row, int col) { return sigma_(row, col); }

  Real sum() const { return sigma_.sum(); }
  Real max() const { return sigma_.maxCoeff(); }
  void scale(Real factor) { sigma_ *= factor; }

  const FieldArray& sigma() const { return sigma_; }
  FieldArray& sigma() { return sigma_; }

 private:
  FieldArray sigma_;
};

// One of the 8 Moore-neighborhood headings, indexed counterclockwise from
// east: 0=E 1=NE 2=N 3=NW 4=W 5=SW 6=S 7=SE. Row offsets use image
// convention (row 0 at the top, so north is row-1).
class Direction {
 public:
  static constexpr int kCount = 8;

  explicit Direction(int index) : index_(index) {
    if (index < 0 || index >= kCount)
      throw DomainError("direction index must be in 0..7, got " +
                        std::to_string(index));
  }

  int index() const { return index_; }
  int row_offset() const { return kRowOffset[index_]; }
  int col_offset() const { return kColOffset[index_]; }

  // Minimal angular difference between two headings in 45-degree steps,
  // 0..4.
  static int angle_steps(Direction a, Direction b) {
    int d = a.index_ - b.index_;
    if (d < 0) d = -d;
    return d <= 4 ? d : kCount - d;
  }

  friend bool operator==(const Direction&, const Direction&) = default;

 private:
  static constexpr int kRowOffset[kCount] = {0, -1, -1, -1, 0, 1, 1, 1};
  static constexpr int kColOffset[kCount] = {1, 1, 0, -1, -1, -1, 0, 1};
  int index_;
};

struct AntState {
  int row = 0;
  int col = 0;
  Direction heading{0};

  friend bool operator==(const AntState&, const AntState&) = default;
};

enum class Metric { statistical, ulam };

inline std::string metric_name(Metric m) {
  return m == Metric::statistical ? "statistical" : "ulam";
}

// Model constants. beta is the osmotropotaxic sensitivity exponent, 1/delta
// the sensory capacity, eta the constant deposition term, p the gain on the
// window-contrast deposition term, evap the per-step retention factor.
struct Params {
  double beta = 3.5;
  double delta = 0.2;
  double eta = 0.01;
  double p = 1.0;
  double evap = 0.99;
  int n_ants = 400;
  int window_radius = 1;
  double a = 1.0 / 3.0;
  double b = 1.0 / 3.0;
  double c = 1.0 / 3.0;
  Metric metric = Metric::ulam;

  void validate() const {
    auto nonneg = [](double v, const char* name) {
      if (!std::isfinite(v) || v < 0.0)
        throw DomainError(std::string(name) + " must be finite and >= 0");
    };
    nonneg(beta, "beta");
    nonneg(delta, "delta");
    nonneg(eta, "eta");
    nonneg(p, "p");
    if (!std::isfinite(evap) || evap < 0.0 || evap > 1.0)
      throw DomainError("evap must be in [0, 1]");
    if (n_ants < 1) throw DomainError("n_ants must be a positive integer");
    if (window_radius < 1) throw DomainError("window_radius must be >= 1");
    nonneg(a, "a");
    nonneg(b, "b");
    nonneg(c, "c");
    if (std::abs(a + b + c - 1.0) > 1e-12)
      throw DomainError("weights a+b+c must equal 1 within 1e-12");
  }

  friend bool operator==(const Params&, const Params&) = default;
};

}  // namespace swarmmap
