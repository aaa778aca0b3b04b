// The binary icosahedral group: 120 exact special-unitary 2x2 matrices,
// structured labels, multiplication table, conjugacy classes, and shortest
// words over the generators {T0, S1, E'}.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "icosa/cyclo.hpp"

namespace icosa {

struct Mat2 {
  // row-major: m[0] m[1] / m[2] m[3]
  std::array<Cyclo, 4> m;

  static Mat2 identity();
  Mat2 operator*(const Mat2& o) const;
  Mat2 operator-() const;
  Mat2 adjoint() const;
  Cyclo det() const;
  bool operator==(const Mat2& o) const;
  bool operator!=(const Mat2& o) const { return !(*this == o); }
  bool is_special_unitary() const;
  std::string key() const;  // canonical string for hashing
};

enum class AxisFamily { five_fold, three_fold, two_fold };

// A rotation axis with exact polar cosine/sine and exact azimuth phasor.
struct Axis {
  AxisFamily family;
  int index;  // five_fold: 0..5, three_fold: 1..10, two_fold: 1..15
  Cyclo cos_polar;
  Cyclo sin_polar;
  Cyclo azimuth;  // e^{i phi}
};

// 6 five-fold, 10 three-fold, 15 two-fold axes, in index order.
const std::vector<Axis>& axes();

// cos(omega/2) * 1 - i sin(omega/2) (axis . sigma), exact.
Mat2 su2_from_axis_angle(const Axis& axis, const Cyclo& cos_half,
                         const Cyclo& sin_half);

struct ElementLabel {
  char kind = 'E';    // 'E', 'T', 'R', 'S'
  int axis = 0;       // axis index within the family
  int power = 0;      // T: 1..4, R: 1..2, S and E: ignored
  bool primed = false;

  std::string str() const;
  static std::optional<ElementLabel> parse(const std::string& s);
  bool operator==(const ElementLabel&) const = default;
};

struct GroupElement {
  Mat2 mat;  // conductor 20
  ElementLabel label;
};

class GroupTable {
 public:
  std::vector<GroupElement> elements;        // size 120, closure order
  std::vector<std::vector<int>> product;     // product[i][j] = index of e_i e_j
  std::vector<int> inverse;                  // index of e_i^-1
  std::vector<std::vector<int>> classes;     // conjugacy classes, sorted
  std::vector<int> class_of;                 // element index -> class id
  std::vector<std::vector<int>> words;       // letters over generator order
  std::vector<int> parent;                   // closure tree, -1 at identity
  std::vector<int> parent_letter;            // letter from parent, -1 at root

  int idx_e = -1, idx_ep = -1, idx_t0 = -1, idx_s1 = -1;
  static constexpr int letter_t0 = 0, letter_s1 = 1, letter_ep = 2;

  int mul(int i, int j) const { return product[i][j]; }
  int size() const { return static_cast<int>(elements.size()); }
  // -1 when no element carries the label
  int index_of(const std::string& label) const;
  int index_of(const ElementLabel& label) const;
  // evaluates a word over the generator matrices
  Mat2 eval_word(const std::vector<int>& word) const;
};

// Built once on first use; immutable afterwards.
const GroupTable& group();

}  // namespace icosa
