#ifndef CLAWCOLOR_COLORING_HPP
#define CLAWCOLOR_COLORING_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clawcolor/error.hpp"
#include "clawcolor/graph.hpp"

namespace clawcolor {

/// Non-decreasing list of class radii (a_1, ..., a_r). Class i must be an
/// a_i-packing: two vertices of class i are at distance greater than a_i.
class SPackingSpec {
public:
    SPackingSpec() = default;
    explicit SPackingSpec(std::vector<int> radii) : radii_(std::move(radii)) {
        if (radii_.empty())
            fail(ErrorCode::InvalidSpec, "spec needs at least one class");
        for (std::size_t i = 0; i < radii_.size(); ++i) {
            if (radii_[i] < 1)
                fail(ErrorCode::InvalidSpec, "radii must be positive");
            if (i > 0 && radii_[i] < radii_[i - 1])
                fail(ErrorCode::InvalidSpec, "radii must be non-decreasing");
        }
    }

    /// "1,1,2,2" style.
    static SPackingSpec parse(std::string_view text) {
        std::vector<int> radii;
        int value = 0;
        bool have_digit = false;
        for (char c : text) {
            if (c >= '0' && c <= '9') {
                value = value * 10 + (c - '0');
                have_digit = true;
                if (value > 1000000)
                    fail(ErrorCode::InvalidSpec, "radius too large");
            } else if (c == ',') {
                if (!have_digit)
                    fail(ErrorCode::InvalidSpec, "empty radius in \"" + std::string(text) + "\"");
                radii.push_back(value);
                value = 0;
                have_digit = false;
            } else if (c != ' ') {
                fail(ErrorCode::InvalidSpec, "unexpected character in \"" + std::string(text) + "\"");
            }
        }
        if (!have_digit)
            fail(ErrorCode::InvalidSpec, "empty radius in \"" + std::string(text) + "\"");
        radii.push_back(value);
        return SPackingSpec(std::move(radii));
    }

    static SPackingSpec one_one_two_two() { return SPackingSpec({1, 1, 2, 2}); }

    std::size_t classes() const noexcept { return radii_.size(); }
    int radius(int cls) const { return radii_[static_cast<std::size_t>(cls)]; }
    const std::vector<int> &radii() const noexcept { return radii_; }
    bool is_one_one_two_two() const { return radii_ == std::vector<int>{1, 1, 2, 2}; }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < radii_.size(); ++i) {
            if (i)
                out += ',';
            out += std::to_string(radii_[i]);
        }
        return out;
    }

    friend bool operator==(const SPackingSpec &, const SPackingSpec &) = default;

private:
    std::vector<int> radii_;
};

/// The four classes of a (1,1,2,2)-coloring: two independent sets and two
/// 2-packings. Values double as class indices into SPackingSpec{1,1,2,2}.
enum class Color : int { one_a = 0, one_b = 1, two_a = 2, two_b = 3 };

constexpr std::string_view label(Color c) noexcept {
    switch (c) {
    case Color::one_a: return "1a";
    case Color::one_b: return "1b";
    case Color::two_a: return "2a";
    case Color::two_b: return "2b";
    }
    return "?";
}

constexpr bool is_two_class(Color c) noexcept { return c == Color::two_a || c == Color::two_b; }

constexpr Color partner(Color c) noexcept {
    switch (c) {
    case Color::one_a: return Color::one_b;
    case Color::one_b: return Color::one_a;
    case Color::two_a: return Color::two_b;
    case Color::two_b: return Color::two_a;
    }
    return c;
}

/// Vertex -> class assignment for a given spec. Unassigned vertices hold kUnassigned.
class PackingColoring {
public:
    static constexpr int kUnassigned = -1;

    PackingColoring() = default;
    PackingColoring(SPackingSpec spec, std::size_t n) : spec_(std::move(spec)), classes_(n, kUnassigned) {}

    static PackingColoring one_one_two_two(std::size_t n) { return {SPackingSpec::one_one_two_two(), n}; }

    const SPackingSpec &spec() const noexcept { return spec_; }
    std::size_t order() const noexcept { return classes_.size(); }

    int class_of(Vertex v) const { return classes_[static_cast<std::size_t>(v)]; }
    bool assigned(Vertex v) const { return class_of(v) != kUnassigned; }
    Color color(Vertex v) const { return static_cast<Color>(class_of(v)); }

    void assign(Vertex v, int cls) { classes_[static_cast<std::size_t>(v)] = cls; }
    void assign(Vertex v, Color c) { assign(v, static_cast<int>(c)); }

    bool complete() const {
        return std::none_of(classes_.begin(), classes_.end(), [](int c) { return c == kUnassigned; });
    }

    /// Exchange two classes everywhere. For equal radii this maps valid
    /// colorings to valid colorings.
    void swap_classes(int a, int b) {
        for (auto &c : classes_) {
            if (c == a)
                c = b;
            else if (c == b)
                c = a;
        }
    }
    void swap_classes(Color a, Color b) { swap_classes(static_cast<int>(a), static_cast<int>(b)); }

    std::string label_of(Vertex v) const { return class_label(spec_, class_of(v)); }

    const std::vector<int> &classes() const noexcept { return classes_; }

    static std::string class_label(const SPackingSpec &spec, int cls) {
        if (cls == kUnassigned)
            return "-";
        if (spec.is_one_one_two_two())
            return std::string(label(static_cast<Color>(cls)));
        return "c" + std::to_string(cls + 1);
    }

    static std::optional<int> parse_label(const SPackingSpec &spec, std::string_view text) {
        if (spec.is_one_one_two_two()) {
            for (int c = 0; c < 4; ++c)
                if (text == label(static_cast<Color>(c)))
                    return c;
        }
        if (text.size() >= 2 && text[0] == 'c') {
            int value = 0;
            for (char ch : text.substr(1)) {
                if (ch < '0' || ch > '9')
                    return std::nullopt;
                value = value * 10 + (ch - '0');
                if (value > 1000000)
                    return std::nullopt;
            }
            if (value >= 1 && static_cast<std::size_t>(value) <= spec.classes())
                return value - 1;
        }
        return std::nullopt;
    }

    friend bool operator==(const PackingColoring &, const PackingColoring &) = default;

private:
    SPackingSpec spec_;
    std::vector<int> classes_;
};

} // namespace clawcolor

#endif
