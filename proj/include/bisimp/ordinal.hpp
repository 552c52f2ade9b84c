#pragma once

// Arrows of the simplex category and words in face/degeneracy operators.

#include <algorithm>
#include <compare>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "bisimp/errors.hpp"

namespace bisimp {

/// A weakly order-preserving map [source_size] -> [target_size].
class OrdinalMap {
public:
    OrdinalMap(int source_size, int target_size, std::vector<int> values)
        : source_size_(source_size), target_size_(target_size), values_(std::move(values)) {
        if (source_size_ < 0 || target_size_ < 0)
            throw RejectedInput("ordinal sizes must be nonnegative");
        if (static_cast<int>(values_.size()) != source_size_ + 1)
            throw RejectedInput("ordinal map needs source_size+1 values");
        for (std::size_t k = 0; k < values_.size(); ++k) {
            if (values_[k] < 0 || values_[k] > target_size_)
                throw RejectedInput("ordinal map value out of range");
            if (k > 0 && values_[k] < values_[k - 1])
                throw RejectedInput("ordinal map is not order-preserving");
        }
    }

    static OrdinalMap identity(int n) {
        std::vector<int> v(n + 1);
        for (int k = 0; k <= n; ++k) v[k] = k;
        return {n, n, std::move(v)};
    }

    /// delta_i : [n-1] -> [n], skips i.
    static OrdinalMap coface(int n, int i) {
        if (n < 1 || i < 0 || i > n) throw RejectedInput("coface index out of range");
        std::vector<int> v(n);
        for (int k = 0; k < n; ++k) v[k] = k < i ? k : k + 1;
        return {n - 1, n, std::move(v)};
    }

    /// sigma_i : [n+1] -> [n], hits i twice.
    static OrdinalMap codegeneracy(int n, int i) {
        if (n < 0 || i < 0 || i > n) throw RejectedInput("codegeneracy index out of range");
        std::vector<int> v(n + 2);
        for (int k = 0; k <= n + 1; ++k) v[k] = k <= i ? k : k - 1;
        return {n + 1, n, std::move(v)};
    }

    int source_size() const { return source_size_; }
    int target_size() const { return target_size_; }
    const std::vector<int>& values() const { return values_; }
    int operator()(int k) const { return values_.at(k); }

    bool is_identity() const { return *this == identity(source_size_); }

    friend bool operator==(const OrdinalMap&, const OrdinalMap&) = default;

private:
    int source_size_;
    int target_size_;
    std::vector<int> values_;
};

inline std::ostream& operator<<(std::ostream& os, const OrdinalMap& a) {
    os << "[" << a.source_size() << "]->[" << a.target_size() << "]{";
    for (std::size_t k = 0; k < a.values().size(); ++k) os << (k ? "," : "") << a.values()[k];
    return os << "}";
}

/// g after f.
inline OrdinalMap compose_ordinal(const OrdinalMap& g, const OrdinalMap& f) {
    if (f.target_size() != g.source_size())
        throw CompositionError("cannot compose [" + std::to_string(f.source_size()) + "]->[" +
                               std::to_string(f.target_size()) + "] with a map out of [" +
                               std::to_string(g.source_size()) + "]");
    std::vector<int> v(f.source_size() + 1);
    for (int k = 0; k <= f.source_size(); ++k) v[k] = g(f(k));
    return {f.source_size(), g.target_size(), std::move(v)};
}

/// One generator of a simplicial operator word.
struct Token {
    enum class Kind { Face, Degeneracy };
    Kind kind;
    int index;

    static Token face(int i) { return {Kind::Face, i}; }
    static Token degeneracy(int i) { return {Kind::Degeneracy, i}; }

    friend bool operator==(const Token&, const Token&) = default;
};

using Word = std::vector<Token>;

/// Token repeated `count` times; a zero power is the empty word.
inline Word power(Token t, int count) {
    if (count < 0) throw RejectedInput("negative operator power");
    return Word(static_cast<std::size_t>(count), t);
}

inline Word concat(std::initializer_list<Word> parts) {
    Word out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

/// Dimension reached by applying `word` (rightmost token first) to an
/// n-simplex, or nullopt if some token is out of range at its position.
inline std::optional<int> word_target_dim(const Word& word, int n) {
    if (n < 0) return std::nullopt;
    int dim = n;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (it->index < 0 || it->index > dim) return std::nullopt;
        if (it->kind == Token::Kind::Face) {
            if (dim < 1) return std::nullopt;
            --dim;
        } else {
            ++dim;
        }
    }
    return dim;
}

inline std::string to_string(const Word& word) {
    if (word.empty()) return "id";
    std::ostringstream os;
    for (std::size_t k = 0; k < word.size(); ++k) {
        os << (k ? " " : "") << (word[k].kind == Token::Kind::Face ? "d" : "s") << word[k].index;
    }
    return os.str();
}

/// A word in face and degeneracy operators acting X_source -> X_target.
///
/// Tokens are stored in written order, as in `s_1 d_0 x`: the rightmost token
/// acts first. The word realizes alpha^* for the ordinal map
/// alpha : [target_dim] -> [source_dim] returned by to_ordinal().
class SimplicialOperator {
public:
    SimplicialOperator(Word tokens, int source_dim) : tokens_(std::move(tokens)), source_dim_(source_dim) {
        auto t = word_target_dim(tokens_, source_dim_);
        if (!t)
            throw RejectedInput("operator word " + to_string(tokens_) + " is not valid on dimension " +
                                std::to_string(source_dim_));
        target_dim_ = *t;
    }

    const Word& tokens() const { return tokens_; }
    int source_dim() const { return source_dim_; }
    int target_dim() const { return target_dim_; }
    bool empty() const { return tokens_.empty(); }

    OrdinalMap to_ordinal() const {
        // The leftmost token's coface/codegeneracy is applied first in Delta.
        OrdinalMap acc = OrdinalMap::identity(target_dim_);
        int dim = target_dim_;
        for (const Token& t : tokens_) {
            // t acts on X_d with d = dim_before; we walk from the output side.
            if (t.kind == Token::Kind::Face) {
                acc = compose_ordinal(OrdinalMap::coface(dim + 1, t.index), acc);
                ++dim;
            } else {
                acc = compose_ordinal(OrdinalMap::codegeneracy(dim - 1, t.index), acc);
                --dim;
            }
        }
        return acc;
    }

    friend bool operator==(const SimplicialOperator&, const SimplicialOperator&) = default;

private:
    Word tokens_;
    int source_dim_;
    int target_dim_ = 0;
};

/// Canonical word for alpha: degeneracies with strictly decreasing indices
/// followed by faces with strictly increasing indices (written order).
inline SimplicialOperator factorize(const OrdinalMap& alpha) {
    const int m = alpha.source_size();
    const int n = alpha.target_size();
    std::vector<bool> hit(n + 1, false);
    for (int v : alpha.values()) hit[v] = true;

    Word word;
    for (int j = m - 1; j >= 0; --j)
        if (alpha(j) == alpha(j + 1)) word.push_back(Token::degeneracy(j));
    for (int i = 0; i <= n; ++i)
        if (!hit[i]) word.push_back(Token::face(i));
    return {std::move(word), n};
}

/// True iff the word already has the canonical shape produced by factorize().
inline bool is_canonical(const Word& word) {
    std::size_t k = 0;
    int last = -1;
    bool first = true;
    for (; k < word.size() && word[k].kind == Token::Kind::Degeneracy; ++k) {
        if (!first && word[k].index >= last) return false;
        last = word[k].index;
        first = false;
    }
    first = true;
    for (; k < word.size(); ++k) {
        if (word[k].kind != Token::Kind::Face) return false;
        if (!first && word[k].index <= last) return false;
        last = word[k].index;
        first = false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// The four iterated-operator identities and the five basic identities, as
// pairs of words to be compared through their ordinal maps.

struct IdentityInstance {
    std::string name;
    Word lhs;
    Word rhs;
    int n;
};

/// Words for iterated identity `family` (1..4) at parameters (i, j, m) on
/// n-simplices, or nullopt when the side condition or dimension validity
/// fails:
///   1: d_i d_j^m = d_j^m d_{i+m}      (i >= j)
///   2: d_i^m     = d_i^{m-1} d_j      (i <= j < i+m)
///   3: d_i s_j^m = s_j^m d_{i-m}      (i > j+m)
///   4: d_i s_j^m = s_j^{m-1}          (j <= i <= j+m)
inline std::optional<IdentityInstance> iterated_identity(int family, int i, int j, int m, int n) {
    if (i < 0 || j < 0 || m < 0 || n < 0) return std::nullopt;
    IdentityInstance inst;
    inst.n = n;
    const Token di = Token::face(i);
    switch (family) {
    case 1:
        if (!(i >= j)) return std::nullopt;
        inst.lhs = concat({{di}, power(Token::face(j), m)});
        inst.rhs = concat({power(Token::face(j), m), {Token::face(i + m)}});
        break;
    case 2:
        if (m < 1 || !(i <= j && j < i + m)) return std::nullopt;
        inst.lhs = power(di, m);
        inst.rhs = concat({power(di, m - 1), {Token::face(j)}});
        break;
    case 3:
        if (!(i > j + m)) return std::nullopt;
        inst.lhs = concat({{di}, power(Token::degeneracy(j), m)});
        inst.rhs = concat({power(Token::degeneracy(j), m), {Token::face(i - m)}});
        break;
    case 4:
        if (m < 1 || !(j <= i && i <= j + m)) return std::nullopt;
        inst.lhs = concat({{di}, power(Token::degeneracy(j), m)});
        inst.rhs = power(Token::degeneracy(j), m - 1);
        break;
    default:
        return std::nullopt;
    }
    if (!word_target_dim(inst.lhs, n) || !word_target_dim(inst.rhs, n)) return std::nullopt;
    std::ostringstream os;
    os << "family " << family << " (i=" << i << ", j=" << j << ", m=" << m << ", n=" << n << ")";
    inst.name = os.str();
    return inst;
}

/// Both sides of an identity realize the same ordinal map.
inline bool words_agree(const IdentityInstance& inst) {
    SimplicialOperator l(inst.lhs, inst.n);
    SimplicialOperator r(inst.rhs, inst.n);
    return l.target_dim() == r.target_dim() && l.to_ordinal() == r.to_ordinal();
}

/// Evaluates one iterated identity. Throws RejectedInput when (i, j, m, n)
/// violates the identity's side condition or is not dimension-valid.
inline bool check_lemma1_identity(int family, int i, int j, int m, int n) {
    auto inst = iterated_identity(family, i, j, m, n);
    if (!inst) {
        std::ostringstream os;
        os << "identity family " << family << " does not apply to (i=" << i << ", j=" << j << ", m=" << m
           << ", n=" << n << ")";
        throw RejectedInput(os.str());
    }
    return words_agree(*inst);
}

/// The five basic simplicial identities, numbered 1..5:
///   1: d_i d_j = d_{j-1} d_i   (i < j)
///   2: d_i s_j = s_{j-1} d_i   (i < j)
///   3: d_j s_j = id            (i == j)
///   3': d_{j+1} s_j = id       (i == j+1)
///   4: d_i s_j = s_j d_{i-1}   (i > j+1)
///   5: s_i s_j = s_{j+1} s_i   (i <= j)
inline std::optional<IdentityInstance> basic_identity(int family, int i, int j, int n) {
    if (i < 0 || j < 0 || n < 0) return std::nullopt;
    IdentityInstance inst;
    inst.n = n;
    switch (family) {
    case 1:
        if (!(i < j)) return std::nullopt;
        inst.lhs = {Token::face(i), Token::face(j)};
        inst.rhs = {Token::face(j - 1), Token::face(i)};
        break;
    case 2:
        if (!(i < j)) return std::nullopt;
        inst.lhs = {Token::face(i), Token::degeneracy(j)};
        inst.rhs = {Token::degeneracy(j - 1), Token::face(i)};
        break;
    case 3:
        if (!(i == j || i == j + 1)) return std::nullopt;
        inst.lhs = {Token::face(i), Token::degeneracy(j)};
        inst.rhs = {};
        break;
    case 4:
        if (!(i > j + 1)) return std::nullopt;
        inst.lhs = {Token::face(i), Token::degeneracy(j)};
        inst.rhs = {Token::degeneracy(j), Token::face(i - 1)};
        break;
    case 5:
        if (!(i <= j)) return std::nullopt;
        inst.lhs = {Token::degeneracy(i), Token::degeneracy(j)};
        inst.rhs = {Token::degeneracy(j + 1), Token::degeneracy(i)};
        break;
    default:
        return std::nullopt;
    }
    if (!word_target_dim(inst.lhs, n) || !word_target_dim(inst.rhs, n)) return std::nullopt;
    std::ostringstream os;
    os << "basic " << family << " (i=" << i << ", j=" << j << ", n=" << n << ")";
    inst.name = os.str();
    return inst;
}

} // namespace bisimp
