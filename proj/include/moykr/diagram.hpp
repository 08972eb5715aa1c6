// Braid words and slice-composed MOY diagram words.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace moykr {

enum class Dir { Up, Down };
using Boundary = std::vector<Dir>;

// Wide is the S graph (two 1-labelled strands merging into a 2-edge and
// splitting again). T is printable only.
enum class GenKind { Id, Cup, Cap, Wide, CrossPos, CrossNeg, T };

struct Generator {
    GenKind kind = GenKind::Id;
    // Id: strand direction. Cup: direction of its left output. Cap: direction of its left input.
    Dir dir = Dir::Up;

    Boundary source() const;
    Boundary target() const;
    friend bool operator==(const Generator&, const Generator&) = default;
};

// One horizontal layer: generators left to right, identity strands explicit.
struct Slice {
    std::vector<Generator> pieces;

    Boundary source() const;
    Boundary target() const;
    bool is_identity() const;
    friend bool operator==(const Slice&, const Slice&) = default;
};

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& msg, std::size_t pos);
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

struct BraidWord {
    int width = 1;
    // +i is sigma_i, -i its inverse, 1 <= i < width.
    std::vector<int> letters;

    void validate() const;
    std::string to_string() const;
    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// Grammar: "w=<width>:" followed by whitespace-separated nonzero integers.
BraidWord parse_braid(const std::string& text);

class DiagramWord {
public:
    DiagramWord() = default;
    // Throws UsageError if consecutive boundaries disagree.
    DiagramWord(Boundary bottom, std::vector<Slice> slices);

    static DiagramWord identity(const Boundary& b);
    static DiagramWord single(const Slice& s);

    const Boundary& bottom() const { return bottom_; }
    Boundary top() const;
    int width() const { return static_cast<int>(bottom_.size()); }
    const std::vector<Slice>& slices() const { return slices_; }
    bool is_closed() const { return bottom_.empty() && top().empty(); }

    void validate() const;
    // Drops identity slices.
    DiagramWord normalized() const;
    std::string render() const;

    friend bool operator==(const DiagramWord&, const DiagramWord&) = default;

private:
    Boundary bottom_;
    std::vector<Slice> slices_;
};

// upper after lower: requires upper.bottom() == lower.top().
DiagramWord compose(const DiagramWord& upper, const DiagramWord& lower);
DiagramWord tensor(const DiagramWord& left, const DiagramWord& right);

// Nested caps and cups on the right of the braid; result has empty boundary.
DiagramWord close(const BraidWord& b);

// Upward width-2 words for the building blocks.
DiagramWord wide_word();
DiagramWord crossing_word(int sign);
DiagramWord braid_word(const BraidWord& b);

}  // namespace moykr
