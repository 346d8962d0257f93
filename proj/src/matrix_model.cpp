#include "sosprop/matrix_model.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace sosprop {

std::string to_string(Coordinate c)
{
    return "(" + std::to_string(c.row + 1) + "," + std::to_string(c.col + 1) + ")";
}

std::string to_string(SignedValue v)
{
    return (v.sign() < 0 ? "-" : "+") + std::to_string(v.color().value);
}

std::string to_string(const Shape& shape)
{
    return "(" + std::to_string(shape.rows) + "," + std::to_string(shape.cols) + "," + std::to_string(shape.colors) + ")";
}

Shape parse_shape(std::string_view text)
{
    std::array<int, 3> parts{};
    std::size_t pos = 0;
    for (int k = 0; k < 3; ++k) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '(')) ++pos;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), parts[k]);
        if (ec != std::errc{}) throw std::invalid_argument("malformed type '" + std::string(text) + "', expected r,s,n");
        pos = static_cast<std::size_t>(ptr - text.data());
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == ')')) ++pos;
        if (k < 2) {
            if (pos >= text.size() || text[pos] != ',')
                throw std::invalid_argument("malformed type '" + std::string(text) + "', expected r,s,n");
            ++pos;
        }
    }
    if (pos != text.size()) throw std::invalid_argument("trailing characters in type '" + std::string(text) + "'");
    if (parts[0] < 1 || parts[1] < 1 || parts[2] < 1)
        throw std::invalid_argument("type '" + std::string(text) + "' needs positive r, s and n");
    return {parts[0], parts[1], parts[2]};
}

std::string_view to_string(Cause cause)
{
    switch (cause) {
    case Cause::External: return "external";
    case Cause::RowColumn: return "row-column";
    case Cause::Square: return "square";
    case Cause::SquareColor: return "square-color";
    case Cause::Search: return "search";
    }
    return "?";
}

std::vector<SignedValue> CandidateSet::members() const
{
    std::vector<SignedValue> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(SignedValue::from_bit(std::countr_zero(b)));
    return out;
}

Geometry::Geometry(int r, int s) : rows(r), cols(s)
{
    const int cells = r * s;
    peers.resize(static_cast<std::size_t>(cells));
    squares_of.resize(static_cast<std::size_t>(cells));
    views_of.resize(static_cast<std::size_t>(cells));

    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < s; ++j) {
            auto& p = peers[static_cast<std::size_t>(i * s + j)];
            for (int jj = 0; jj < s; ++jj)
                if (jj != j) p.push_back(i * s + jj);
            for (int ii = 0; ii < r; ++ii)
                if (ii != i) p.push_back(ii * s + j);
        }
    }

    for (int top = 0; top < r; ++top) {
        for (int bottom = top + 1; bottom < r; ++bottom) {
            for (int left = 0; left < s; ++left) {
                for (int right = left + 1; right < s; ++right) {
                    const int id = static_cast<int>(squares.size());
                    squares.push_back({top, bottom, left, right});
                    const int tl = top * s + left, tr = top * s + right;
                    const int bl = bottom * s + left, br = bottom * s + right;
                    auto add = [&](int self, int opposite, int same_row, int same_col) {
                        squares_of[static_cast<std::size_t>(self)].push_back(id);
                        views_of[static_cast<std::size_t>(self)].push_back({id, opposite, same_row, same_col});
                    };
                    add(tl, br, tr, bl);
                    add(tr, bl, tl, br);
                    add(bl, tr, br, tl);
                    add(br, tl, bl, tr);
                }
            }
        }
    }
}

MatrixState::MatrixState(int rows, int cols, int colors)
{
    if (rows < 1 || cols < 1 || colors < 1)
        throw std::invalid_argument("matrix dimensions must be positive, got " + to_string(Shape{rows, cols, colors}));
    if (colors > kMaxColors)
        throw std::invalid_argument("at most " + std::to_string(kMaxColors) + " colors are supported, got " +
                                    std::to_string(colors));
    shape_ = {rows, cols, colors};
    geometry_ = std::make_shared<const Geometry>(rows, cols);
    cells_.assign(static_cast<std::size_t>(rows * cols), CandidateSet::full(colors));
}

void MatrixState::compact_queues()
{
    values_.erase(values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(value_head_));
    colors_.erase(colors_.begin(), colors_.begin() + static_cast<std::ptrdiff_t>(color_head_));
    value_head_ = 0;
    color_head_ = 0;
}

bool operator==(const MatrixState& a, const MatrixState& b)
{
    if (a.shape_ != b.shape_ || a.cells_ != b.cells_) return false;
    auto av = a.pending_values(), bv = b.pending_values();
    auto ac = a.pending_colors(), bc = b.pending_colors();
    return std::equal(av.begin(), av.end(), bv.begin(), bv.end()) &&
           std::equal(ac.begin(), ac.end(), bc.begin(), bc.end());
}

namespace {

std::string cell_token(const CandidateSet& set)
{
    if (set.assigned()) return std::to_string(set.value().as_int());
    if (auto color = set.known_color()) return "±" + std::to_string(color->value);
    return "*";
}

template <typename Render>
std::string format_grid(const MatrixState& state, Render render)
{
    std::ostringstream out;
    for (int i = 0; i < state.rows(); ++i) {
        for (int j = 0; j < state.cols(); ++j) {
            if (j > 0) out << ' ';
            out << render(state.candidates(Coordinate{i, j}));
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace

std::string format_candidates(const CandidateSet& set)
{
    std::string out = "{";
    bool first = true;
    const auto members = set.members();
    for (std::size_t k = 0; k < members.size(); ++k) {
        if (!first) out += ",";
        first = false;
        const auto v = members[k];
        if (v.sign() > 0 && k + 1 < members.size() && members[k + 1] == -v) {
            out += "±" + std::to_string(v.color().value);
            ++k;
        } else {
            out += to_string(v);
        }
    }
    return out + "}";
}

std::string format_matrix(const MatrixState& state)
{
    return format_grid(state, cell_token);
}

std::string format_candidates(const MatrixState& state)
{
    return format_grid(state, [](const CandidateSet& set) {
        return set.assigned() ? std::to_string(set.value().as_int()) : format_candidates(set);
    });
}

namespace {

MatrixText::Cell parse_token(std::string_view tok)
{
    using Kind = MatrixText::Kind;
    if (tok == "*") return {Kind::Unknown, 0};
    Kind kind = Kind::Value;
    int sign = 1;
    if (tok.starts_with("±")) {
        kind = Kind::ColorOnly;
        tok.remove_prefix(std::string_view("±").size());
    } else if (tok.starts_with("+-") || tok.starts_with("-+")) {
        kind = Kind::ColorOnly;
        tok.remove_prefix(2);
    } else if (tok.starts_with("+")) {
        tok.remove_prefix(1);
    } else if (tok.starts_with("-")) {
        sign = -1;
        tok.remove_prefix(1);
    }
    int color = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), color);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || color < 1)
        throw std::invalid_argument("bad matrix cell '" + std::string(tok) + "'");
    return {kind, kind == Kind::Value ? sign * color : color};
}

}  // namespace

MatrixText parse_matrix_text(std::string_view text)
{
    MatrixText out;
    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        std::vector<MatrixText::Cell> row;
        std::size_t p = 0;
        while (p < line.size()) {
            while (p < line.size() && (line[p] == ' ' || line[p] == '\t' || line[p] == '\r' || line[p] == ',')) ++p;
            if (p >= line.size()) break;
            std::size_t q = p;
            while (q < line.size() && line[q] != ' ' && line[q] != '\t' && line[q] != '\r' && line[q] != ',') ++q;
            row.push_back(parse_token(line.substr(p, q - p)));
            p = q;
        }
        if (row.empty()) continue;
        if (out.rows == 0) {
            out.cols = static_cast<int>(row.size());
        } else if (static_cast<int>(row.size()) != out.cols) {
            throw std::invalid_argument("line " + std::to_string(line_no) + " has " + std::to_string(row.size()) +
                                        " cells, expected " + std::to_string(out.cols));
        }
        out.cells.insert(out.cells.end(), row.begin(), row.end());
        ++out.rows;
    }
    if (out.rows == 0) throw std::invalid_argument("empty matrix text");
    return out;
}

}  // namespace sosprop
