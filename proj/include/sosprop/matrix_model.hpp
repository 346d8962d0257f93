#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sosprop {

/// Candidate sets are 64-bit words holding two bits per color.
inline constexpr int kMaxColors = 32;

struct Color {
    int value = 1;

    friend constexpr auto operator<=>(const Color&, const Color&) = default;
};

/// A color together with a sign; the atom of matrix entries.
class SignedValue {
public:
    constexpr SignedValue(Color color, int sign) : raw_(sign < 0 ? -color.value : color.value) {}

    /// Builds from the signed-integer spelling used in matrix text ("-3").
    static SignedValue from_int(int v)
    {
        if (v == 0) throw std::invalid_argument("signed value must be nonzero");
        return SignedValue(Color{v < 0 ? -v : v}, v < 0 ? -1 : 1);
    }

    constexpr Color color() const { return Color{raw_ < 0 ? -raw_ : raw_}; }
    constexpr int sign() const { return raw_ < 0 ? -1 : 1; }
    constexpr int as_int() const { return raw_; }
    constexpr SignedValue operator-() const { return SignedValue(color(), -sign()); }

    /// Bit position inside a CandidateSet: color-major, + before -.
    constexpr int bit() const { return 2 * (color().value - 1) + (raw_ < 0 ? 1 : 0); }
    static constexpr SignedValue from_bit(int bit) { return SignedValue(Color{bit / 2 + 1}, (bit & 1) ? -1 : 1); }

    friend constexpr bool operator==(const SignedValue&, const SignedValue&) = default;

private:
    int raw_;
};

struct Coordinate {
    int row = 0;  // 0-based
    int col = 0;  // 0-based

    friend constexpr auto operator<=>(const Coordinate&, const Coordinate&) = default;
};

/// "(2,1)" using the 1-based convention of printed matrices.
std::string to_string(Coordinate c);
/// "+3" / "-3".
std::string to_string(SignedValue v);

/// Set of colors, stored in the same even-bit positions a CandidateSet uses for +c.
class ColorSet {
public:
    static constexpr std::uint64_t kEven = 0x5555555555555555ULL;

    constexpr ColorSet() = default;
    static constexpr ColorSet from_spread(std::uint64_t spread) { return ColorSet(spread & kEven); }
    static constexpr ColorSet single(Color c) { return ColorSet(std::uint64_t{1} << (2 * (c.value - 1))); }

    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(Color c) const { return (bits_ & single(c).bits_) != 0; }
    constexpr std::uint64_t spread() const { return bits_; }
    /// Pre: !empty().
    constexpr Color first() const { return Color{std::countr_zero(bits_) / 2 + 1}; }

    constexpr ColorSet operator&(ColorSet o) const { return ColorSet(bits_ & o.bits_); }
    constexpr ColorSet operator|(ColorSet o) const { return ColorSet(bits_ | o.bits_); }
    friend constexpr bool operator==(const ColorSet&, const ColorSet&) = default;

private:
    constexpr explicit ColorSet(std::uint64_t bits) : bits_(bits) {}
    std::uint64_t bits_ = 0;
};

/// The signed values still possible at one cell.
///
/// A cell is assigned when exactly one value remains and color-known when every
/// remaining value shares one color. The empty set is never held by a MatrixState;
/// eliminating the last value is reported as a contradiction instead.
class CandidateSet {
public:
    constexpr CandidateSet() = default;

    static constexpr CandidateSet full(int n)
    {
        return CandidateSet(n >= kMaxColors ? ~std::uint64_t{0} : (std::uint64_t{1} << (2 * n)) - 1);
    }
    static constexpr CandidateSet single(SignedValue v) { return CandidateSet(std::uint64_t{1} << v.bit()); }
    static constexpr CandidateSet of_color(Color c) { return CandidateSet(std::uint64_t{3} << (2 * (c.value - 1))); }
    static constexpr CandidateSet of_colors(ColorSet colors) { return CandidateSet(colors.spread() | (colors.spread() << 1)); }
    static constexpr CandidateSet from_bits(std::uint64_t bits) { return CandidateSet(bits); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(SignedValue v) const { return (bits_ >> v.bit()) & 1U; }
    constexpr bool assigned() const { return std::has_single_bit(bits_); }
    /// Lowest value in canonical order (ascending color, + before -). Pre: !empty().
    constexpr SignedValue first() const { return SignedValue::from_bit(std::countr_zero(bits_)); }
    /// Pre: assigned().
    constexpr SignedValue value() const { return first(); }

    constexpr ColorSet colors() const { return ColorSet::from_spread(bits_ | (bits_ >> 1)); }
    constexpr bool color_known() const { return std::has_single_bit(colors().spread()); }
    /// Exactly two values remain.
    constexpr bool is_pair() const { return bits_ != 0 && std::has_single_bit(bits_ & (bits_ - 1)); }
    constexpr std::optional<Color> known_color() const
    {
        if (!color_known()) return std::nullopt;
        return colors().first();
    }

    /// { -v : v in this }.
    constexpr CandidateSet negated() const
    {
        return CandidateSet(((bits_ & ColorSet::kEven) << 1) | ((bits_ >> 1) & ColorSet::kEven));
    }

    constexpr void insert(SignedValue v) { bits_ |= std::uint64_t{1} << v.bit(); }
    constexpr void erase(SignedValue v) { bits_ &= ~(std::uint64_t{1} << v.bit()); }

    constexpr CandidateSet operator&(CandidateSet o) const { return CandidateSet(bits_ & o.bits_); }
    constexpr CandidateSet operator|(CandidateSet o) const { return CandidateSet(bits_ | o.bits_); }
    constexpr CandidateSet operator-(CandidateSet o) const { return CandidateSet(bits_ & ~o.bits_); }
    constexpr bool subset_of(CandidateSet o) const { return (bits_ & ~o.bits_) == 0; }

    /// Members in canonical order.
    std::vector<SignedValue> members() const;

    friend constexpr bool operator==(const CandidateSet&, const CandidateSet&) = default;

private:
    constexpr explicit CandidateSet(std::uint64_t bits) : bits_(bits) {}
    std::uint64_t bits_ = 0;
};

struct Shape {
    int rows = 0;
    int cols = 0;
    int colors = 0;

    friend constexpr bool operator==(const Shape&, const Shape&) = default;
};

std::string to_string(const Shape& shape);
/// Parses "r,s,n"; each part must be positive. Throws std::invalid_argument.
Shape parse_shape(std::string_view text);

/// A 2x2 submatrix: rows {top, bottom}, columns {left, right}, top < bottom, left < right.
struct SquareRef {
    int top = 0;
    int bottom = 0;
    int left = 0;
    int right = 0;

    std::array<Coordinate, 4> corners() const
    {
        return {Coordinate{top, left}, Coordinate{top, right}, Coordinate{bottom, left}, Coordinate{bottom, right}};
    }

    friend constexpr bool operator==(const SquareRef&, const SquareRef&) = default;
};

/// A square seen from one of its corners, as cell indices.
struct SquareView {
    int square = 0;
    int opposite = 0;
    int same_row = 0;
    int same_col = 0;
};

/// Immutable geometry shared by every snapshot of one shape.
struct Geometry {
    explicit Geometry(int rows, int cols);

    int rows;
    int cols;
    std::vector<SquareRef> squares;
    std::vector<std::vector<int>> peers;            // cell -> cells in the same row or column
    std::vector<std::vector<int>> squares_of;       // cell -> indices into squares
    std::vector<std::vector<SquareView>> views_of;  // cell -> squares labelled from that cell
};

enum class Cause { External, RowColumn, Square, SquareColor, Search };

std::string_view to_string(Cause cause);

/// Instrumentation hook. Not part of the state's value; snapshots share the pointer.
class PropagationObserver {
public:
    virtual ~PropagationObserver() = default;
    virtual void on_assign(Coordinate, SignedValue, Cause) {}
    virtual void on_eliminate(Coordinate, SignedValue, Cause) {}
    virtual void on_value_dequeued(Coordinate, SignedValue) {}
    virtual void on_color_dequeued(Coordinate, Color) {}
};

struct ValueItem {
    int cell;
    SignedValue value;

    friend bool operator==(const ValueItem&, const ValueItem&) = default;
};

struct ColorItem {
    int cell;
    Color color;

    friend bool operator==(const ColorItem&, const ColorItem&) = default;
};

/// The full solver state: candidate grid, shared geometry, and the two FIFO
/// propagation queues. Copying yields an independent snapshot.
class MatrixState {
public:
    /// Every cell starts as {+-1..+-n}. Throws std::invalid_argument for non-positive
    /// dimensions or n > kMaxColors.
    MatrixState(int rows, int cols, int colors);

    const Shape& shape() const { return shape_; }
    int rows() const { return shape_.rows; }
    int cols() const { return shape_.cols; }
    int colors() const { return shape_.colors; }
    int cell_count() const { return shape_.rows * shape_.cols; }
    const Geometry& geometry() const { return *geometry_; }

    int index(Coordinate c) const { return c.row * shape_.cols + c.col; }
    Coordinate coordinate(int index) const { return {index / shape_.cols, index % shape_.cols}; }
    bool in_bounds(Coordinate c) const
    {
        return c.row >= 0 && c.row < shape_.rows && c.col >= 0 && c.col < shape_.cols;
    }
    bool in_range(SignedValue v) const { return v.color().value >= 1 && v.color().value <= shape_.colors; }

    const CandidateSet& candidates(int index) const { return cells_[index]; }
    const CandidateSet& candidates(Coordinate c) const { return cells_[index(c)]; }
    CandidateSet& candidates(int index) { return cells_[index]; }
    std::span<const CandidateSet> cells() const { return cells_; }

    // Queues hold each (cell, value) / (cell, color) pair at most once.
    void push_value(int cell, SignedValue v) { values_.push_back({cell, v}); }
    void push_color(int cell, Color c) { colors_.push_back({cell, c}); }
    bool has_pending_value() const { return value_head_ < values_.size(); }
    bool has_pending_color() const { return color_head_ < colors_.size(); }
    ValueItem pop_value() { return values_[value_head_++]; }
    ColorItem pop_color() { return colors_[color_head_++]; }
    std::span<const ValueItem> pending_values() const { return std::span(values_).subspan(value_head_); }
    std::span<const ColorItem> pending_colors() const { return std::span(colors_).subspan(color_head_); }
    void compact_queues();

    PropagationObserver* observer() const { return observer_; }
    void set_observer(PropagationObserver* observer) { observer_ = observer; }

    /// Cells, pending queue contents and shape; geometry and observer are not compared.
    friend bool operator==(const MatrixState& a, const MatrixState& b);

private:
    Shape shape_;
    std::shared_ptr<const Geometry> geometry_;
    std::vector<CandidateSet> cells_;
    std::vector<ValueItem> values_;
    std::vector<ColorItem> colors_;
    std::size_t value_head_ = 0;
    std::size_t color_head_ = 0;
    PropagationObserver* observer_ = nullptr;
};

inline MatrixState make_matrix(int rows, int cols, int colors) { return MatrixState(rows, cols, colors); }

/// Independent deep copy (the geometry is immutable and may be shared).
inline MatrixState snapshot(const MatrixState& state) { return state; }

/// Matrix text: one row per line, whitespace separated. Assigned cells are signed
/// integers ("3", "-3"), color-known cells "±c", anything else "*".
std::string format_matrix(const MatrixState& state);

/// Debug rendering that spells out every candidate set, e.g. "{±1,±3,-4}".
std::string format_candidates(const MatrixState& state);
std::string format_candidates(const CandidateSet& set);

/// Parsed matrix text before it is applied to a state.
struct MatrixText {
    enum class Kind { Unknown, Value, ColorOnly };
    struct Cell {
        Kind kind = Kind::Unknown;
        int value = 0;  // signed value for Value, color for ColorOnly
    };
    int rows = 0;
    int cols = 0;
    std::vector<Cell> cells;
};

/// Accepts "3", "+3", "-3", "±3", "+-3", "*". Blank lines and '#' comments are skipped.
/// Throws std::invalid_argument on ragged rows or bad tokens.
MatrixText parse_matrix_text(std::string_view text);

}  // namespace sosprop
