#ifndef VKNOT_GAUSS_HPP
#define VKNOT_GAUSS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace vknot {

// Tail marks the overpass end of a chord's arrow ("O" token), Head the
// underpass end ("U" token).
enum class Role : std::uint8_t { Tail, Head };

enum class Parity : std::uint8_t { Even, Odd };

struct Endpoint {
    int chord = 0;
    Role role = Role::Tail;

    bool operator==(const Endpoint&) const = default;
};

// A Gauss diagram: basepointed cyclic word of chord endpoints plus a sign
// per chord. Index 0 is the basepoint; the cyclic successor of the last
// endpoint is index 0. Values are immutable after construction; every
// operation returns a fresh diagram.
class GaussDiagram {
public:
    GaussDiagram() = default;
    GaussDiagram(std::vector<Endpoint> word, std::map<int, int> signs);

    // Gauss code grammar: code := eps | token ("," token)* ;
    // token := ("O"|"U") int sign ; int := nonzero decimal, no leading
    // zeros; sign := "+"|"-". Whitespace after commas and a trailing
    // newline are tolerated.
    static GaussDiagram parse(std::string_view code);
    std::string render() const;

    // Representative over all rotations of the cyclic word: chords are
    // relabeled by first appearance and the lexicographically least
    // rendered code wins. Orientation is never reversed.
    GaussDiagram canonical() const;

    // Word rotated so that old position k becomes position 0.
    GaussDiagram rotated(int k) const;

    int chord_count() const { return static_cast<int>(signs_.size()); }
    int size() const { return static_cast<int>(word_.size()); }
    bool empty() const { return word_.empty(); }

    const std::vector<Endpoint>& word() const { return word_; }
    const Endpoint& at(int pos) const { return word_[static_cast<size_t>(pos)]; }
    const std::map<int, int>& signs() const { return signs_; }
    int sign(int chord) const;
    bool has_chord(int chord) const { return signs_.count(chord) != 0; }
    int position_of(int chord, Role role) const;

    // True iff the endpoints of b separate the endpoints of a on the
    // cyclic word (the chords cross).
    bool interleaves(int a, int b) const;

    // Odd iff the number of chords interleaving c is odd.
    Parity parity(int chord) const;

    // No two chords interleave; such a diagram represents the unknot.
    bool is_parallel() const;

    bool operator==(const GaussDiagram&) const = default;

private:
    void validate() const;

    std::vector<Endpoint> word_;
    std::map<int, int> signs_;
};

} // namespace vknot

#endif
