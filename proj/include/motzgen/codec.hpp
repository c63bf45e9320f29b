#ifndef MOTZGEN_CODEC_HPP
#define MOTZGEN_CODEC_HPP

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "motzgen/remy.hpp"
#include "motzgen/tree.hpp"

namespace motzgen {

// Motzkin words are strings over {'c', '(', ')'} in the language
//   M = eps | c M | (M) M
// i.e. every prefix has at least as many '(' as ')' and the totals agree.
// A word of length n names a Motzkin tree of size n.

struct WordVerdict {
    enum class Kind { Ok, PrematureClose, Unbalanced, BadSymbol };
    Kind kind = Kind::Ok;
    std::size_t position = 0;  // 1-based symbol position; length+1 for Unbalanced

    bool ok() const { return kind == Kind::Ok; }
};

WordVerdict validate_word(std::string_view word);

class WordError : public std::invalid_argument {
public:
    WordError(WordVerdict verdict, const std::string& what)
        : std::invalid_argument(what), verdict_(verdict) {}
    const WordVerdict& verdict() const { return verdict_; }

private:
    WordVerdict verdict_;
};

// f and its inverse between words and trees:
//   f[eps] = Leaf,  f[c w] = Unary(f[w]),  f[(w1) w2] = Binary(f[w1], f[w2])
MotzkinTree word_to_tree(std::string_view word);  // throws WordError
std::string tree_to_word(const MotzkinTree& tree);

// Lattice paths: '(' <-> Up, ')' <-> Down, 'c' <-> Straight.
enum class Step : std::uint8_t { Up, Down, Straight };
using MotzkinPath = std::vector<Step>;

MotzkinPath word_to_path(std::string_view word);  // throws WordError
std::string path_to_word(const MotzkinPath& path);

std::string path_to_string(const MotzkinPath& path);  // over 'U','D','S'
MotzkinPath path_from_string(std::string_view text);

// Non-crossing partial chord diagrams on n_points circle positions,
// numbered 1..n_points counterclockwise; chords stored with i < j.
struct ChordDiagram {
    std::size_t n_points = 0;
    std::vector<std::pair<std::size_t, std::size_t>> chords;

    bool operator==(const ChordDiagram&) const = default;
};

ChordDiagram word_to_chords(std::string_view word);  // throws WordError
// Rejects duplicate endpoints, out-of-range endpoints and crossing chords.
std::string chords_to_word(const ChordDiagram& diagram);

// One line: "<n_points> i-j i-j ..." with chords ordered by first endpoint.
std::string chords_to_line(const ChordDiagram& diagram);

// DOT documents; one node per line, edges parent -> child, leaves as points.
void to_dot(const MotzkinTree& tree, std::ostream& out);
void to_dot(const BinaryTreeVector& v, std::ostream& out);

}  // namespace motzgen

#endif  // MOTZGEN_CODEC_HPP
