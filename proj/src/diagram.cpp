#include "moykr/diagram.hpp"

#include "moykr/ring.hpp"

#include <cctype>
#include <sstream>

namespace moykr {

namespace {

Dir flip(Dir d)
{
    return d == Dir::Up ? Dir::Down : Dir::Up;
}

char arrow(Dir d)
{
    return d == Dir::Up ? '^' : 'v';
}

Slice pad(int left_up, const Generator& g, int right_up, int down)
{
    Slice s;
    for (int i = 0; i < left_up; ++i) s.pieces.push_back({GenKind::Id, Dir::Up});
    s.pieces.push_back(g);
    for (int i = 0; i < right_up; ++i) s.pieces.push_back({GenKind::Id, Dir::Up});
    for (int i = 0; i < down; ++i) s.pieces.push_back({GenKind::Id, Dir::Down});
    return s;
}

}  // namespace

Boundary Generator::source() const
{
    switch (kind) {
    case GenKind::Id: return {dir};
    case GenKind::Cup: return {};
    case GenKind::Cap: return {dir, flip(dir)};
    case GenKind::Wide:
    case GenKind::CrossPos:
    case GenKind::CrossNeg: return {Dir::Up, Dir::Up};
    case GenKind::T: return {Dir::Up, Dir::Up, Dir::Up};
    }
    return {};
}

Boundary Generator::target() const
{
    switch (kind) {
    case GenKind::Cup: return {dir, flip(dir)};
    case GenKind::Cap: return {};
    default: return source();
    }
}

Boundary Slice::source() const
{
    Boundary b;
    for (const auto& g : pieces) {
        auto s = g.source();
        b.insert(b.end(), s.begin(), s.end());
    }
    return b;
}

Boundary Slice::target() const
{
    Boundary b;
    for (const auto& g : pieces) {
        auto t = g.target();
        b.insert(b.end(), t.begin(), t.end());
    }
    return b;
}

bool Slice::is_identity() const
{
    for (const auto& g : pieces)
        if (g.kind != GenKind::Id) return false;
    return true;
}

ParseError::ParseError(const std::string& msg, std::size_t pos)
    : std::invalid_argument(msg + " at position " + std::to_string(pos)), pos_(pos)
{
}

void BraidWord::validate() const
{
    if (width < 1) throw UsageError("braid width must be at least 1");
    for (int l : letters) {
        if (l == 0 || std::abs(l) >= width)
            throw UsageError("braid letter " + std::to_string(l) + " out of range for width " + std::to_string(width));
    }
}

std::string BraidWord::to_string() const
{
    std::string s = "w=" + std::to_string(width) + ":";
    for (int l : letters) s += " " + std::to_string(l);
    return s;
}

BraidWord parse_braid(const std::string& text)
{
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_int = [&](bool allow_sign) -> int {
        std::size_t start = i;
        if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        std::size_t digits = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == digits) throw ParseError("expected integer", start);
        if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != ':')
            throw ParseError("malformed token", start);
        try {
            return std::stoi(text.substr(start, i - start));
        } catch (const std::out_of_range&) {
            throw ParseError("integer out of range", start);
        }
    };

    skip_ws();
    if (text.compare(i, 2, "w=") != 0) throw ParseError("expected width declaration 'w=<n>:'", i);
    i += 2;
    std::size_t wpos = i;
    BraidWord b;
    b.width = read_int(false);
    if (b.width < 1) throw ParseError("width must be at least 1", wpos);
    skip_ws();
    if (i >= text.size() || text[i] != ':') throw ParseError("expected ':' after width", i);
    ++i;
    for (;;) {
        skip_ws();
        if (i >= text.size()) break;
        std::size_t pos = i;
        int l = read_int(true);
        if (l == 0 || std::abs(l) >= b.width)
            throw ParseError("generator index " + std::to_string(l) + " out of range for width " +
                                 std::to_string(b.width),
                             pos);
        b.letters.push_back(l);
    }
    return b;
}

DiagramWord::DiagramWord(Boundary bottom, std::vector<Slice> slices)
    : bottom_(std::move(bottom)), slices_(std::move(slices))
{
    validate();
}

DiagramWord DiagramWord::identity(const Boundary& b)
{
    return DiagramWord(b, {});
}

DiagramWord DiagramWord::single(const Slice& s)
{
    return DiagramWord(s.source(), {s});
}

Boundary DiagramWord::top() const
{
    return slices_.empty() ? bottom_ : slices_.back().target();
}

void DiagramWord::validate() const
{
    Boundary cur = bottom_;
    for (std::size_t i = 0; i < slices_.size(); ++i) {
        if (slices_[i].source() != cur)
            throw UsageError("slice " + std::to_string(i) + " does not match the boundary below it");
        cur = slices_[i].target();
    }
}

DiagramWord DiagramWord::normalized() const
{
    std::vector<Slice> kept;
    for (const auto& s : slices_)
        if (!s.is_identity()) kept.push_back(s);
    return DiagramWord(bottom_, kept);
}

std::string DiagramWord::render() const
{
    auto boundary_line = [](const Boundary& b) {
        std::string s;
        for (Dir d : b) s += std::string(1, arrow(d)) + " ";
        return s.empty() ? std::string("(empty)") : s;
    };
    std::vector<std::string> lines;
    lines.push_back(boundary_line(bottom_));
    for (const auto& s : slices_) {
        std::string row;
        for (const auto& g : s.pieces) {
            switch (g.kind) {
            case GenKind::Id: row += std::string("|") + arrow(g.dir) + " "; break;
            case GenKind::Cup: row += std::string("\\_") + arrow(g.dir) + "/ "; break;
            case GenKind::Cap: row += std::string("/~") + arrow(g.dir) + "\\ "; break;
            case GenKind::Wide: row += "[S] "; break;
            case GenKind::CrossPos: row += "[X+] "; break;
            case GenKind::CrossNeg: row += "[X-] "; break;
            case GenKind::T: row += "[T] "; break;
            }
        }
        lines.push_back(row);
        lines.push_back(boundary_line(s.target()));
    }
    std::string out;
    for (auto it = lines.rbegin(); it != lines.rend(); ++it) out += *it + "\n";
    return out;
}

DiagramWord compose(const DiagramWord& upper, const DiagramWord& lower)
{
    if (upper.bottom() != lower.top()) throw UsageError("compose: boundary mismatch");
    std::vector<Slice> slices = lower.slices();
    slices.insert(slices.end(), upper.slices().begin(), upper.slices().end());
    return DiagramWord(lower.bottom(), slices);
}

DiagramWord tensor(const DiagramWord& left, const DiagramWord& right)
{
    std::size_t h = std::max(left.slices().size(), right.slices().size());
    auto layer = [](const DiagramWord& w, std::size_t i) {
        if (i < w.slices().size()) return w.slices()[i];
        Slice s;
        for (Dir d : w.top()) s.pieces.push_back({GenKind::Id, d});
        return s;
    };
    std::vector<Slice> slices;
    for (std::size_t i = 0; i < h; ++i) {
        Slice s = layer(left, i);
        Slice r = layer(right, i);
        s.pieces.insert(s.pieces.end(), r.pieces.begin(), r.pieces.end());
        slices.push_back(s);
    }
    Boundary bottom = left.bottom();
    bottom.insert(bottom.end(), right.bottom().begin(), right.bottom().end());
    return DiagramWord(bottom, slices);
}

DiagramWord braid_word(const BraidWord& b)
{
    b.validate();
    std::vector<Slice> slices;
    for (int l : b.letters) {
        int i = std::abs(l);
        Generator g{l > 0 ? GenKind::CrossPos : GenKind::CrossNeg, Dir::Up};
        slices.push_back(pad(i - 1, g, b.width - i - 1, 0));
    }
    return DiagramWord(Boundary(static_cast<std::size_t>(b.width), Dir::Up), slices);
}

DiagramWord close(const BraidWord& b)
{
    b.validate();
    const int w = b.width;
    std::vector<Slice> slices;
    for (int j = 0; j < w; ++j) slices.push_back(pad(j, {GenKind::Cup, Dir::Up}, 0, j));
    for (int l : b.letters) {
        int i = std::abs(l);
        Generator g{l > 0 ? GenKind::CrossPos : GenKind::CrossNeg, Dir::Up};
        slices.push_back(pad(i - 1, g, w - i - 1, w));
    }
    for (int j = w - 1; j >= 0; --j) slices.push_back(pad(j, {GenKind::Cap, Dir::Up}, 0, j));
    return DiagramWord({}, slices);
}

DiagramWord wide_word()
{
    return DiagramWord::single(Slice{{{GenKind::Wide, Dir::Up}}});
}

DiagramWord crossing_word(int sign)
{
    return DiagramWord::single(Slice{{{sign > 0 ? GenKind::CrossPos : GenKind::CrossNeg, Dir::Up}}});
}

}  // namespace moykr
