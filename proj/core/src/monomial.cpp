#include "qcohom/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "qcohom/errors.hpp"

namespace qcohom {

Monomial::Monomial(std::span<const Exponent> e) : e_(e.begin(), e.end()) {
    for (Exponent x : e_) {
        if (x < 0)
            throw InconsistentInput("negative exponent");
        deg_ += x;
    }
}

Monomial Monomial::var_power(std::size_t nvars, std::size_t var, Exponent power) {
    if (power < 0)
        throw InconsistentInput("negative exponent");
    Monomial m(nvars);
    m.e_.at(var) = power;
    m.deg_ = power;
    return m;
}

bool Monomial::divides(const Monomial &other) const {
    if (deg_ > other.deg_)
        return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > other.e_[i])
            return false;
    return true;
}

long Monomial::pure_power_var() const {
    long var = -1;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] == 0)
            continue;
        if (var >= 0)
            return -1;
        var = static_cast<long>(i);
    }
    return var;
}

Monomial operator*(const Monomial &a, const Monomial &b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i)
        r.e_[i] += b.e_[i];
    r.deg_ += b.deg_;
    return r;
}

Monomial operator/(const Monomial &a, const Monomial &b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) {
        r.e_[i] -= b.e_[i];
        if (r.e_[i] < 0)
            throw InconsistentInput("monomial quotient is not exact");
    }
    r.deg_ -= b.deg_;
    return r;
}

Monomial lcm(const Monomial &a, const Monomial &b) {
    Monomial r = a;
    r.deg_ = 0;
    for (std::size_t i = 0; i < r.e_.size(); ++i) {
        r.e_[i] = std::max(a.e_[i], b.e_[i]);
        r.deg_ += r.e_[i];
    }
    return r;
}

bool coprime(const Monomial &a, const Monomial &b) {
    for (std::size_t i = 0; i < a.e_.size(); ++i)
        if (a.e_[i] != 0 && b.e_[i] != 0)
            return false;
    return true;
}

std::string Monomial::to_string(const std::vector<std::string> &vars) const {
    std::string out;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += i < vars.size() ? vars[i] : "x" + std::to_string(i);
        if (e_[i] > 1)
            out += "^" + std::to_string(e_[i]);
    }
    return out.empty() ? "1" : out;
}

std::size_t MonomialHash::operator()(const Monomial &m) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (Exponent x : m.exponents())
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

// ---------------------------------------------------------------------------

namespace {

using Kind = MonomialOrder::Kind;

std::strong_ordering lex_compare(const Monomial &a, const Monomial &b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i])
            return a[i] <=> b[i];
    return std::strong_ordering::equal;
}

// Reverse lexicographic tie break for equal degree: the monomial with the
// smaller exponent in the last differing variable is larger.
std::strong_ordering revlex_tail(const Monomial &a, const Monomial &b) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i])
            return b[i] <=> a[i];
    return std::strong_ordering::equal;
}

bool in_block(const std::vector<std::size_t> &front, std::size_t i) {
    return std::binary_search(front.begin(), front.end(), i);
}

// Compare restricted to the variables selected by `inside(i)`.
template <class Pred>
std::strong_ordering restricted_compare(Kind kind, const Monomial &a, const Monomial &b, Pred inside) {
    if (kind == Kind::Lex) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (inside(i) && a[i] != b[i])
                return a[i] <=> b[i];
        return std::strong_ordering::equal;
    }
    long da = 0, db = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (inside(i)) {
            da += a[i];
            db += b[i];
        }
    if (da != db)
        return da <=> db;
    for (std::size_t i = a.size(); i-- > 0;)
        if (inside(i) && a[i] != b[i])
            return b[i] <=> a[i];
    return std::strong_ordering::equal;
}

} // namespace

MonomialOrder MonomialOrder::weighted_grevlex(std::vector<long> weights) {
    for (long w : weights)
        if (w <= 0)
            throw InconsistentInput("weighted order needs strictly positive weights");
    MonomialOrder o(Kind::WeightedGrevlex);
    o.weights_ = std::move(weights);
    return o;
}

MonomialOrder MonomialOrder::block(std::vector<std::size_t> front, Kind front_kind, Kind rest_kind) {
    auto simple = [](Kind k) { return k == Kind::Lex || k == Kind::Grevlex; };
    if (!simple(front_kind) || !simple(rest_kind))
        throw InconsistentInput("block orders combine lex/grevlex blocks only");
    std::sort(front.begin(), front.end());
    front.erase(std::unique(front.begin(), front.end()), front.end());
    MonomialOrder o(Kind::Block);
    o.front_ = std::move(front);
    o.front_kind_ = front_kind;
    o.rest_kind_ = rest_kind;
    return o;
}

void MonomialOrder::check_arity(std::size_t nvars) const {
    if (kind_ == Kind::WeightedGrevlex && weights_.size() != nvars)
        throw InconsistentInput("weight vector length does not match the variable count");
    if (kind_ == Kind::Block && !front_.empty() && front_.back() >= nvars)
        throw InconsistentInput("block variable index out of range");
}

std::strong_ordering MonomialOrder::compare(const Monomial &a, const Monomial &b) const {
    switch (kind_) {
    case Kind::Lex:
        return lex_compare(a, b);
    case Kind::Grevlex:
        if (a.total_degree() != b.total_degree())
            return a.total_degree() <=> b.total_degree();
        return revlex_tail(a, b);
    case Kind::WeightedGrevlex: {
        long wa = 0, wb = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            wa += weights_[i] * a[i];
            wb += weights_[i] * b[i];
        }
        if (wa != wb)
            return wa <=> wb;
        return revlex_tail(a, b);
    }
    case Kind::Block: {
        const auto &f = front_;
        auto c = restricted_compare(front_kind_, a, b, [&f](std::size_t i) { return in_block(f, i); });
        if (c != 0)
            return c;
        return restricted_compare(rest_kind_, a, b, [&f](std::size_t i) { return !in_block(f, i); });
    }
    }
    return std::strong_ordering::equal;
}

long MonomialOrder::sugar_degree(const Monomial &m) const {
    if (kind_ == Kind::WeightedGrevlex) {
        long w = 0;
        for (std::size_t i = 0; i < m.size(); ++i)
            w += weights_[i] * m[i];
        return w;
    }
    return m.total_degree();
}

std::string MonomialOrder::to_string() const {
    auto name = [](Kind k) {
        switch (k) {
        case Kind::Lex: return std::string("lex");
        case Kind::Grevlex: return std::string("grevlex");
        case Kind::WeightedGrevlex: return std::string("wgrevlex");
        case Kind::Block: return std::string("block");
        }
        return std::string("?");
    };
    std::string s = name(kind_);
    if (kind_ == Kind::WeightedGrevlex) {
        s += "(";
        for (std::size_t i = 0; i < weights_.size(); ++i)
            s += (i ? "," : "") + std::to_string(weights_[i]);
        s += ")";
    } else if (kind_ == Kind::Block) {
        s += "({";
        for (std::size_t i = 0; i < front_.size(); ++i)
            s += (i ? "," : "") + std::to_string(front_[i]);
        s += "}:" + name(front_kind_) + "," + name(rest_kind_) + ")";
    }
    return s;
}

} // namespace qcohom
