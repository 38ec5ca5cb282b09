#include "vjw/laurent.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <sstream>

#include "vjw/error.hpp"

namespace vjw {

LaurentMono LaurentMono::q_power(int32_t e) {
    LaurentMono m;
    m.q_exp = e;
    return m;
}

LaurentMono LaurentMono::from_weight(const WeightExpr& w) {
    LaurentMono m;
    m.q_exp = static_cast<int32_t>(w.offset());
    for (const auto& [sym, c] : w.coeffs()) m.t_exps[sym] = static_cast<int32_t>(c);
    return m;
}

bool LaurentMono::is_one() const {
    if (q_exp != 0) return false;
    for (int32_t e : t_exps)
        if (e != 0) return false;
    return true;
}

LaurentMono LaurentMono::inverse() const {
    LaurentMono m;
    m.q_exp = -q_exp;
    for (int i = 0; i < kMaxSymbols; ++i) m.t_exps[i] = -t_exps[i];
    return m;
}

LaurentMono LaurentMono::operator*(const LaurentMono& o) const {
    LaurentMono m;
    m.q_exp = q_exp + o.q_exp;
    for (int i = 0; i < kMaxSymbols; ++i) m.t_exps[i] = t_exps[i] + o.t_exps[i];
    return m;
}

LaurentMono LaurentMono::operator/(const LaurentMono& o) const {
    LaurentMono m;
    m.q_exp = q_exp - o.q_exp;
    for (int i = 0; i < kMaxSymbols; ++i) m.t_exps[i] = t_exps[i] - o.t_exps[i];
    return m;
}

size_t LaurentMonoHash::operator()(const LaurentMono& m) const {
    // FNV-1a over the exponent words; exponents are small so this mixes fine.
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](uint32_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(static_cast<uint32_t>(m.q_exp));
    for (int32_t e : m.t_exps) mix(static_cast<uint32_t>(e));
    return static_cast<size_t>(h);
}

namespace {

struct Box {
    int32_t q_lo, q_hi;
    std::array<int32_t, kMaxSymbols> t_lo{}, t_hi{};
    bool valid = true;
};

// Per-variable exponent ranges of the exact quotient p/d, when it exists:
// min and max exponents are additive under multiplication variable by
// variable, so quotient range = p range - d range.  An empty range in any
// variable proves non-divisibility.
Box quotient_box(const LaurentPoly& p, const LaurentPoly& d) {
    auto range = [](const LaurentPoly& f, auto proj) {
        int32_t lo = proj(f.terms()[0].mono), hi = lo;
        for (const auto& t : f.terms()) {
            lo = std::min(lo, proj(t.mono));
            hi = std::max(hi, proj(t.mono));
        }
        return std::pair{lo, hi};
    };
    Box box;
    auto [pq_lo, pq_hi] = range(p, [](const LaurentMono& m) { return m.q_exp; });
    auto [dq_lo, dq_hi] = range(d, [](const LaurentMono& m) { return m.q_exp; });
    box.q_lo = pq_lo - dq_lo;
    box.q_hi = pq_hi - dq_hi;
    if (box.q_lo > box.q_hi) box.valid = false;
    for (int j = 0; j < kMaxSymbols && box.valid; ++j) {
        auto [pt_lo, pt_hi] = range(p, [j](const LaurentMono& m) { return m.t_exps[j]; });
        auto [dt_lo, dt_hi] = range(d, [j](const LaurentMono& m) { return m.t_exps[j]; });
        box.t_lo[j] = pt_lo - dt_lo;
        box.t_hi[j] = pt_hi - dt_hi;
        if (box.t_lo[j] > box.t_hi[j]) box.valid = false;
    }
    return box;
}

bool in_box(const LaurentMono& m, const Box& box) {
    if (m.q_exp < box.q_lo || m.q_exp > box.q_hi) return false;
    for (int j = 0; j < kMaxSymbols; ++j)
        if (m.t_exps[j] < box.t_lo[j] || m.t_exps[j] > box.t_hi[j]) return false;
    return true;
}

// Dense exponent-lattice kernels ---------------------------------------
//
// Multiplication and exact division spend most of their time in hashed
// sparse accumulation and rational renormalization.  When the exponents of
// the operands occupy a small bounding box, working on a flat array indexed
// by exponent offset is far cheaper: the inner loops touch machine words (or
// bare mpz cells) with no hashing and no per-term allocation, and descending
// array order coincides with the canonical term order, so results come out
// already sorted.  Per variable the lattice steps by the gcd of all exponent
// offsets, which keeps the array small for the parity-structured polynomials
// that dominate here (products of w-brackets move every exponent by 2).

constexpr int kAxes = kMaxSymbols + 1;  // t_0..t_{kMaxSymbols-1}, then q

// Axis order puts t_0 most significant and q least significant, matching the
// lexicographic monomial order.
int32_t axis_exp(const LaurentMono& m, int axis) {
    return axis < kMaxSymbols ? m.t_exps[axis] : m.q_exp;
}

struct OperandStats {
    std::array<int32_t, kAxes> lo, hi;
    // gcd of exponent offsets within the operand, per axis; 0 when constant.
    std::array<int32_t, kAxes> step;
};

OperandStats operand_stats(const LaurentPoly& p) {
    OperandStats s;
    const LaurentMono& first = p.terms()[0].mono;
    for (int a = 0; a < kAxes; ++a) {
        s.lo[a] = s.hi[a] = axis_exp(first, a);
        s.step[a] = 0;
    }
    for (const auto& t : p.terms()) {
        for (int a = 0; a < kAxes; ++a) {
            int32_t e = axis_exp(t.mono, a);
            s.lo[a] = std::min(s.lo[a], e);
            s.hi[a] = std::max(s.hi[a], e);
            s.step[a] = static_cast<int32_t>(
                std::gcd(static_cast<int64_t>(s.step[a]),
                         static_cast<int64_t>(e) - axis_exp(first, a)));
        }
    }
    return s;
}

struct Lattice {
    std::array<int32_t, kAxes> lo{};
    std::array<int32_t, kAxes> step{};
    std::array<int64_t, kAxes> span{};
    std::array<int64_t, kAxes> mult{};  // row-major, axis 0 most significant
    int64_t cells = 1;

    // Linear offset of a monomial on the lattice anchored at `base`; the
    // caller guarantees every axis offset is a multiple of the step.
    int64_t offset_of(const LaurentMono& m, const std::array<int32_t, kAxes>& base) const {
        int64_t idx = 0;
        for (int a = 0; a < kAxes; ++a)
            idx += ((static_cast<int64_t>(axis_exp(m, a)) - base[a]) / step[a]) * mult[a];
        return idx;
    }

    LaurentMono mono_at(int64_t idx) const {
        LaurentMono m;
        for (int a = 0; a < kAxes; ++a) {
            int64_t digit = (idx / mult[a]) % span[a];
            int32_t e = lo[a] + static_cast<int32_t>(digit) * step[a];
            if (a < kMaxSymbols)
                m.t_exps[a] = e;
            else
                m.q_exp = e;
        }
        return m;
    }
};

std::optional<Lattice> make_lattice(const std::array<int64_t, kAxes>& lo,
                                    const std::array<int64_t, kAxes>& hi,
                                    const std::array<int32_t, kAxes>& step,
                                    int64_t max_cells) {
    Lattice lat;
    for (int a = 0; a < kAxes; ++a) {
        if (lo[a] < std::numeric_limits<int32_t>::min() ||
            hi[a] > std::numeric_limits<int32_t>::max())
            return std::nullopt;
        lat.lo[a] = static_cast<int32_t>(lo[a]);
        lat.step[a] = step[a] > 0 ? step[a] : 1;
        lat.span[a] = (hi[a] - lo[a]) / lat.step[a] + 1;
        if (lat.span[a] > max_cells / lat.cells) return std::nullopt;
        lat.cells *= lat.span[a];
    }
    lat.mult[kAxes - 1] = 1;
    for (int a = kAxes - 2; a >= 0; --a) lat.mult[a] = lat.mult[a + 1] * lat.span[a + 1];
    return lat;
}

constexpr int64_t kDenseWordCells = int64_t{1} << 22;
constexpr int64_t kDenseMpzCells = int64_t{1} << 20;

// Largest coefficient bit length, or nullopt if some coefficient does not
// fit in a signed long.
std::optional<size_t> coeff_bits_if_small(const LaurentPoly& p) {
    size_t bits = 1;
    for (const auto& t : p.terms()) {
        if (!t.coeff.get_num().fits_slong_p()) return std::nullopt;
        bits = std::max(bits, mpz_sizeinbase(t.coeff.get_num().get_mpz_t(), 2));
    }
    return bits;
}

std::optional<LaurentPoly> multiply_dense(const LaurentPoly& a, const LaurentPoly& b) {
    // Rational coefficients are rare (scalar-scaled polynomials) and go
    // through the hashed path.
    if (!a.has_integer_coeffs() || !b.has_integer_coeffs()) return std::nullopt;

    OperandStats sa = operand_stats(a), sb = operand_stats(b);
    std::array<int64_t, kAxes> lo, hi;
    std::array<int32_t, kAxes> step;
    for (int ax = 0; ax < kAxes; ++ax) {
        lo[ax] = static_cast<int64_t>(sa.lo[ax]) + sb.lo[ax];
        hi[ax] = static_cast<int64_t>(sa.hi[ax]) + sb.hi[ax];
        step[ax] = static_cast<int32_t>(std::gcd(sa.step[ax], sb.step[ax]));
    }

    // A cell collects at most min(|a|,|b|) cross products, since either
    // factor of a product determines the other.  This bounds the accumulated
    // magnitude and decides whether plain int64 arithmetic is safe.
    auto bits_a = coeff_bits_if_small(a), bits_b = coeff_bits_if_small(b);
    size_t count_bits = std::bit_width(std::min(a.size(), b.size()));
    bool word_kernel = bits_a && bits_b && *bits_a + *bits_b + count_bits <= 62;

    const int64_t pairs = static_cast<int64_t>(a.size()) * static_cast<int64_t>(b.size());
    int64_t cap = std::min(word_kernel ? kDenseWordCells : kDenseMpzCells, 24 * pairs + 1024);
    auto lat = make_lattice(lo, hi, step, cap);
    if (!lat) return std::nullopt;

    std::vector<int64_t> ia, ib;
    ia.reserve(a.size());
    ib.reserve(b.size());
    for (const auto& t : a.terms()) ia.push_back(lat->offset_of(t.mono, sa.lo));
    for (const auto& t : b.terms()) ib.push_back(lat->offset_of(t.mono, sb.lo));

    std::vector<LaurentPoly::Term> out;
    if (word_kernel) {
        std::vector<long> ca, cb;
        ca.reserve(a.size());
        cb.reserve(b.size());
        for (const auto& t : a.terms()) ca.push_back(t.coeff.get_num().get_si());
        for (const auto& t : b.terms()) cb.push_back(t.coeff.get_num().get_si());
        std::vector<int64_t> grid(static_cast<size_t>(lat->cells), 0);
        for (size_t i = 0; i < ia.size(); ++i) {
            const int64_t base = ia[i];
            const long c = ca[i];
            for (size_t j = 0; j < ib.size(); ++j) grid[base + ib[j]] += c * cb[j];
        }
        for (int64_t idx = lat->cells - 1; idx >= 0; --idx)
            if (grid[idx]) out.push_back({lat->mono_at(idx), Rat(grid[idx])});
    } else {
        std::vector<mpz_class> grid(static_cast<size_t>(lat->cells));
        for (size_t i = 0; i < ia.size(); ++i) {
            const int64_t base = ia[i];
            const mpz_srcptr c = a.terms()[i].coeff.get_num().get_mpz_t();
            for (size_t j = 0; j < ib.size(); ++j)
                mpz_addmul(grid[base + ib[j]].get_mpz_t(), c,
                           b.terms()[j].coeff.get_num().get_mpz_t());
        }
        for (int64_t idx = lat->cells - 1; idx >= 0; --idx)
            if (mpz_sgn(grid[idx].get_mpz_t()) != 0)
                out.push_back({lat->mono_at(idx), Rat(std::move(grid[idx]))});
    }
    return LaurentPoly::from_sorted_terms(std::move(out));
}

enum class DenseDiv { kNotApplicable, kNotDivisible, kDivided };

// Exact division as a single descending sweep over the dividend's lattice.
// Needs a unit leading coefficient on the divisor so quotient coefficients
// stay integral; rational dividends are pre-scaled by the lcm of their
// coefficient denominators.  Every intermediate remainder term stays inside
// the dividend's exponent box (quotient box + divisor box = dividend box per
// variable), so the whole division runs in place on one flat array.
DenseDiv divide_dense(const LaurentPoly& p, const LaurentPoly& d, const Box& box,
                      LaurentPoly& out) {
    if (!d.has_integer_coeffs()) return DenseDiv::kNotApplicable;
    if (mpz_cmpabs_ui(d.leading().coeff.get_num().get_mpz_t(), 1) != 0)
        return DenseDiv::kNotApplicable;

    OperandStats sp = operand_stats(p), sd = operand_stats(d);
    std::array<int64_t, kAxes> lo, hi;
    std::array<int32_t, kAxes> step;
    for (int ax = 0; ax < kAxes; ++ax) {
        lo[ax] = sp.lo[ax];
        hi[ax] = sp.hi[ax];
        step[ax] = static_cast<int32_t>(std::gcd(sp.step[ax], sd.step[ax]));
    }
    const int64_t pairs = static_cast<int64_t>(p.size()) * static_cast<int64_t>(d.size());
    auto lat = make_lattice(lo, hi, step, std::min(kDenseMpzCells, 32 * pairs + 1024));
    if (!lat) return DenseDiv::kNotApplicable;

    // Clear denominators once; the quotient picks the factor back up at the end.
    mpz_class den_lcm = 1;
    for (const auto& t : p.terms())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());

    std::vector<mpz_class> grid(static_cast<size_t>(lat->cells));
    for (const auto& t : p.terms()) {
        mpz_class& cell = grid[lat->offset_of(t.mono, lat->lo)];
        mpz_divexact(cell.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
        cell *= t.coeff.get_num();
    }

    const auto& dl = d.leading();
    const bool lead_negative = dl.coeff < 0;
    std::vector<int64_t> tail_delta;
    std::vector<mpz_srcptr> tail_coeff;
    for (size_t k = 1; k < d.size(); ++k) {
        const auto& t = d.terms()[k];
        int64_t delta = 0;
        for (int ax = 0; ax < kAxes; ++ax)
            delta += ((static_cast<int64_t>(axis_exp(t.mono, ax)) - axis_exp(dl.mono, ax)) /
                      lat->step[ax]) *
                     lat->mult[ax];
        tail_delta.push_back(delta);
        tail_coeff.push_back(t.coeff.get_num().get_mpz_t());
    }

    std::vector<std::pair<LaurentMono, mpz_class>> quot;
    mpz_class qc;
    for (int64_t idx = lat->cells - 1; idx >= 0; --idx) {
        if (mpz_sgn(grid[idx].get_mpz_t()) == 0) continue;
        LaurentMono qm = lat->mono_at(idx) / dl.mono;
        if (!in_box(qm, box)) return DenseDiv::kNotDivisible;
        mpz_swap(qc.get_mpz_t(), grid[idx].get_mpz_t());
        if (lead_negative) mpz_neg(qc.get_mpz_t(), qc.get_mpz_t());
        for (size_t k = 0; k < tail_delta.size(); ++k)
            mpz_submul(grid[idx + tail_delta[k]].get_mpz_t(), qc.get_mpz_t(), tail_coeff[k]);
        quot.emplace_back(qm, qc);
    }

    std::vector<LaurentPoly::Term> terms;
    terms.reserve(quot.size());
    for (auto& [qm, c] : quot) {
        Rat coeff(std::move(c), den_lcm);
        coeff.canonicalize();
        terms.push_back({qm, std::move(coeff)});
    }
    out = LaurentPoly::from_sorted_terms(std::move(terms));
    return DenseDiv::kDivided;
}

}  // namespace

LaurentPoly LaurentPoly::one() { return constant(Rat(1)); }

LaurentPoly LaurentPoly::constant(Rat c) {
    LaurentPoly p;
    if (c != 0) p.terms_.push_back({LaurentMono::one(), std::move(c)});
    return p;
}

LaurentPoly LaurentPoly::monomial(const LaurentMono& m, Rat c) {
    LaurentPoly p;
    if (c != 0) p.terms_.push_back({m, std::move(c)});
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.mono > b.mono; });
    LaurentPoly p;
    p.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff == 0) p.terms_.pop_back();
        } else if (t.coeff != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

LaurentPoly LaurentPoly::from_sorted_terms(std::vector<Term> terms) {
    LaurentPoly p;
    p.terms_ = std::move(terms);
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
}

bool LaurentPoly::has_integer_coeffs() const {
    for (const auto& t : terms_)
        if (t.coeff.get_den() != 1) return false;
    return true;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), ae = terms_.end();
    auto b = o.terms_.begin(), be = o.terms_.end();
    while (a != ae && b != be) {
        if (a->mono > b->mono) {
            r.terms_.push_back(*a++);
        } else if (b->mono > a->mono) {
            r.terms_.push_back(*b++);
        } else {
            Rat c = a->coeff + b->coeff;
            if (c != 0) r.terms_.push_back({a->mono, std::move(c)});
            ++a;
            ++b;
        }
    }
    r.terms_.insert(r.terms_.end(), a, ae);
    r.terms_.insert(r.terms_.end(), b, be);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), ae = terms_.end();
    auto b = o.terms_.begin(), be = o.terms_.end();
    while (a != ae && b != be) {
        if (a->mono > b->mono) {
            r.terms_.push_back(*a++);
        } else if (b->mono > a->mono) {
            r.terms_.push_back({b->mono, -b->coeff});
            ++b;
        } else {
            Rat c = a->coeff - b->coeff;
            if (c != 0) r.terms_.push_back({a->mono, std::move(c)});
            ++a;
            ++b;
        }
    }
    r.terms_.insert(r.terms_.end(), a, ae);
    for (; b != be; ++b) r.terms_.push_back({b->mono, -b->coeff});
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    if (is_monomial()) return o.scaled_shifted(terms_[0].coeff, terms_[0].mono);
    if (o.is_monomial()) return scaled_shifted(o.terms_[0].coeff, o.terms_[0].mono);
    if (auto dense = multiply_dense(*this, o)) return std::move(*dense);
    PolyAccumulator acc;
    acc.add_product(*this, o);
    return acc.take();
}

LaurentPoly LaurentPoly::scaled(const Rat& c) const {
    if (c == 0) return {};
    LaurentPoly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
    return r;
}

LaurentPoly LaurentPoly::shifted(const LaurentMono& m) const {
    LaurentPoly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff});
    return r;
}

LaurentPoly LaurentPoly::scaled_shifted(const Rat& c, const LaurentMono& m) const {
    if (c == 0) return {};
    LaurentPoly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

bool LaurentPoly::less(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size();
    for (size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].mono != b.terms_[i].mono) return a.terms_[i].mono < b.terms_[i].mono;
        if (a.terms_[i].coeff != b.terms_[i].coeff)
            return a.terms_[i].coeff < b.terms_[i].coeff;
    }
    return false;
}

LaurentPoly LaurentPoly::specialized(const std::map<int, long>& assignment) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        long qe = t.mono.q_exp;
        for (int j = 0; j < kMaxSymbols; ++j) {
            int32_t e = t.mono.t_exps[j];
            if (e == 0) continue;
            auto it = assignment.find(j);
            if (it == assignment.end())
                throw ConfigError("specialization does not assign symbol index " +
                                  std::to_string(j));
            qe += static_cast<long>(e) * it->second;
        }
        if (qe > std::numeric_limits<int32_t>::max() || qe < std::numeric_limits<int32_t>::min())
            throw ConfigError("specialized exponent overflows");
        out.push_back({LaurentMono::q_power(static_cast<int32_t>(qe)), t.coeff});
    }
    return from_terms(std::move(out));
}

int LaurentPoly::max_symbol() const {
    int m = -1;
    for (const auto& t : terms_)
        for (int j = kMaxSymbols - 1; j > m; --j)
            if (t.mono.t_exps[j] != 0) m = j;
    return m;
}

namespace {

void render_power(std::ostream& os, const std::string& name, int32_t e, bool& first) {
    if (e == 0) return;
    if (!first) os << "*";
    first = false;
    os << name;
    if (e != 1) os << "^" << e;
}

}  // namespace

std::string LaurentPoly::to_string(const std::vector<std::string>& t_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first_term = true;
    for (const auto& t : terms_) {
        Rat c = t.coeff;
        if (first_term) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first_term = false;
        bool first_factor = true;
        std::ostringstream body;
        for (int j = 0; j < kMaxSymbols; ++j) {
            std::string name = j < static_cast<int>(t_names.size())
                                   ? t_names[j]
                                   : "t" + std::to_string(j + 1);
            render_power(body, name, t.mono.t_exps[j], first_factor);
        }
        render_power(body, "q", t.mono.q_exp, first_factor);
        std::string b = body.str();
        if (b.empty()) {
            os << c;
        } else {
            if (c != 1) os << c << "*";
            os << b;
        }
    }
    return os.str();
}

std::pair<PolyUnit, LaurentPoly> canonical_split(const LaurentPoly& p) {
    if (p.is_zero()) throw DivisionByZeroError("canonical_split of zero polynomial");
    // Monomial shift: bring every variable's minimum exponent to zero.
    LaurentMono shift = p.terms()[0].mono;
    for (const auto& t : p.terms()) {
        shift.q_exp = std::min(shift.q_exp, t.mono.q_exp);
        for (int j = 0; j < kMaxSymbols; ++j)
            shift.t_exps[j] = std::min(shift.t_exps[j], t.mono.t_exps[j]);
    }
    // Rational content: gcd of numerators over lcm of denominators, signed so
    // the leading coefficient of the canonical part is positive.
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& t : p.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    }
    Rat content(num_gcd, den_lcm);
    content.canonicalize();
    if (p.leading().coeff < 0) content = -content;
    Rat inv_content = 1 / content;
    LaurentPoly core = p.scaled_shifted(inv_content, shift.inverse());
    return {PolyUnit{std::move(content), shift}, std::move(core)};
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& p, const LaurentPoly& d) {
    if (d.is_zero()) throw DivisionByZeroError("exact division by zero polynomial");
    if (p.is_zero()) return LaurentPoly::zero();
    if (d.is_monomial())
        return p.scaled_shifted(1 / d.leading().coeff, d.leading().mono.inverse());
    Box box = quotient_box(p, d);
    if (!box.valid) return std::nullopt;

    LaurentPoly dense_quot;
    switch (divide_dense(p, d, box, dense_quot)) {
        case DenseDiv::kDivided:
            return dense_quot;
        case DenseDiv::kNotDivisible:
            return std::nullopt;
        case DenseDiv::kNotApplicable:
            break;
    }

    // Standard leading-term elimination.  Quotient monomials are confined to
    // the box; a candidate outside it proves non-divisibility, which also
    // bounds the number of reduction steps.
    LaurentPoly rem = p;
    std::vector<LaurentPoly::Term> quot;
    const auto& dl = d.leading();
    while (!rem.is_zero()) {
        LaurentMono qm = rem.leading().mono / dl.mono;
        if (!in_box(qm, box)) return std::nullopt;
        Rat qc = rem.leading().coeff / dl.coeff;
        quot.push_back({qm, qc});
        rem = rem - d.scaled_shifted(qc, qm);
    }
    // Leading monomials strictly decrease, so terms are already sorted.
    LaurentPoly result;
    result = LaurentPoly::from_terms(std::move(quot));
    return result;
}

void PolyAccumulator::add(const LaurentPoly& p) {
    for (const auto& t : p.terms()) {
        auto [it, fresh] = acc_.try_emplace(t.mono, t.coeff);
        if (!fresh) it->second += t.coeff;
    }
}

void PolyAccumulator::add_scaled(const LaurentPoly& p, const Rat& c, const LaurentMono& shift) {
    if (c == 0) return;
    for (const auto& t : p.terms()) {
        LaurentMono m = t.mono * shift;
        auto [it, fresh] = acc_.try_emplace(m, 0);
        if (fresh)
            it->second = t.coeff * c;
        else
            it->second += t.coeff * c;
    }
}

void PolyAccumulator::add_product(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return;
    const LaurentPoly& outer = a.size() <= b.size() ? a : b;
    const LaurentPoly& inner = a.size() <= b.size() ? b : a;
    if (a.has_integer_coeffs() && b.has_integer_coeffs()) {
        // Integer fast path: accumulate into numerators with mpz_addmul,
        // skipping rational renormalization.  Valid because every entry we
        // touch stays integral (denominator 1) throughout.
        for (const auto& ot : outer.terms()) {
            const mpz_srcptr oc = ot.coeff.get_num().get_mpz_t();
            for (const auto& it2 : inner.terms()) {
                LaurentMono m = ot.mono * it2.mono;
                auto [slot, fresh] = acc_.try_emplace(m, 0);
                if (fresh || slot->second.get_den() == 1) {
                    mpz_addmul(slot->second.get_num().get_mpz_t(), oc,
                               it2.coeff.get_num().get_mpz_t());
                } else {
                    slot->second += ot.coeff * it2.coeff;
                }
            }
        }
        return;
    }
    for (const auto& ot : outer.terms()) add_scaled(inner, ot.coeff, ot.mono);
}

LaurentPoly PolyAccumulator::take() {
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(acc_.size());
    for (auto& [m, c] : acc_) {
        if (c != 0) terms.push_back({m, std::move(c)});
    }
    acc_.clear();
    return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace vjw
