#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace rackhom {

using Element = int;
using Tuple = std::vector<Element>;
using OpTable = std::vector<std::vector<int>>;

// First (lexicographic) triple violating (x<y)<z = (x<z)<(y<z).
struct ShelfAxiomFailure {
    std::array<int, 3> witness;
    int lhs = 0;
    int rhs = 0;
};

// First (s, y, z) violating (s<y)<z = (s<z)<(y<z).
struct XSetAxiomFailure {
    std::array<int, 3> witness;
    int lhs = 0;
    int rhs = 0;
};

struct ShelfFlags {
    bool is_shelf = false;
    bool is_rack = false;
    bool is_spindle = false;
    bool is_quandle = false;

    bool operator==(const ShelfFlags&) const = default;
};

// A finite shelf on {0, ..., n-1}. Instances always satisfy
// self-distributivity; use classify() to build one from a raw table.
class FiniteShelf {
public:
    int size() const { return size_; }
    Element op(Element x, Element y) const { return table_[x * size_ + y]; }
    const ShelfFlags& flags() const { return flags_; }
    bool is_rack() const { return flags_.is_rack; }
    bool is_spindle() const { return flags_.is_spindle; }
    bool is_quandle() const { return flags_.is_quandle; }
    OpTable table() const;

    bool operator==(const FiniteShelf& other) const { return size_ == other.size_ && table_ == other.table_; }

private:
    friend std::variant<FiniteShelf, ShelfAxiomFailure> classify(const OpTable&);
    FiniteShelf(int size, std::vector<int> table, ShelfFlags flags)
        : size_(size), table_(std::move(table)), flags_(flags)
    {
    }

    int size_ = 0;
    std::vector<int> table_;
    ShelfFlags flags_;
};

// Exhaustive classification. Throws InputError on a non-square table or an
// out-of-range entry; returns the witness when the shelf axiom fails.
std::variant<FiniteShelf, ShelfAxiomFailure> classify(const OpTable& table);

// Like classify(), but throws InputError when the table is not a shelf.
FiniteShelf make_shelf(const OpTable& table);

namespace builtin {
FiniteShelf dihedral(int n);
FiniteShelf trivial(int n);
FiniteShelf permutation(const std::vector<int>& perm);
// Conjugation quandle x<y = y^-1 x y of a group given by its multiplication
// table (entry (a,b) = ab).
FiniteShelf conjugation(const OpTable& group);
}  // namespace builtin

// Orbits of the group generated by the right translations -<y. Requires a
// rack. Parts are sorted internally and ordered by their least element.
std::vector<std::vector<Element>> orbits(const FiniteShelf& shelf);

// (x1, ..., xn) -> (x1^{x2...xn}, x2^{x3...xn}, ..., xn).
Tuple remarkable_map(const FiniteShelf& shelf, const Tuple& tuple);

class XSetAction {
public:
    const FiniteShelf& base() const { return base_; }
    int size() const { return size_; }
    int act(int s, Element y) const { return action_[s * base_.size() + y]; }
    OpTable action() const;

private:
    friend std::variant<XSetAction, XSetAxiomFailure> validate_xset(const FiniteShelf&, const OpTable&);
    XSetAction(FiniteShelf base, int size, std::vector<int> action)
        : base_(std::move(base)), size_(size), action_(std::move(action))
    {
    }

    FiniteShelf base_;
    int size_ = 0;
    std::vector<int> action_;
};

std::variant<XSetAction, XSetAxiomFailure> validate_xset(const FiniteShelf& shelf, const OpTable& action);

// Raw axiom scans on unvalidated tables. `base` need not be a shelf.
std::optional<ShelfAxiomFailure> find_shelf_witness(const OpTable& table);
std::optional<XSetAxiomFailure> find_xset_witness(const OpTable& base, const OpTable& action);

// Coefficients for the rack complex: Z with trivial action, ZX with the
// action of X on itself, or the linearization of a finite X-set.
class CoefficientSystem {
public:
    enum class Kind { trivial, self, xset };

    static CoefficientSystem trivial() { return CoefficientSystem(Kind::trivial, std::nullopt); }
    static CoefficientSystem self(const FiniteShelf& shelf);
    static CoefficientSystem xset(XSetAction action) { return CoefficientSystem(Kind::xset, std::move(action)); }

    Kind kind() const { return kind_; }
    bool is_trivial() const { return kind_ == Kind::trivial; }
    // Rank of the coefficient module (number of points of S).
    int size() const { return action_ ? action_->size() : 1; }
    int act(int s, Element y) const { return action_ ? action_->act(s, y) : s; }
    const std::optional<XSetAction>& action() const { return action_; }
    std::string name() const;

private:
    CoefficientSystem(Kind kind, std::optional<XSetAction> action) : kind_(kind), action_(std::move(action)) {}

    Kind kind_;
    std::optional<XSetAction> action_;
};

}  // namespace rackhom
