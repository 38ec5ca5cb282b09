#include "vjw/weight.hpp"

#include "vjw/error.hpp"

namespace vjw {

WeightExpr WeightExpr::symbol(int index) {
    if (index < 0 || index >= kMaxSymbols) {
        throw ConfigError("weight symbol index " + std::to_string(index) +
                          " out of range (max " + std::to_string(kMaxSymbols) + " symbols)");
    }
    WeightExpr w;
    w.coeffs_[index] = 1;
    return w;
}

long WeightExpr::constant_value() const {
    if (!is_constant()) throw Error("weight expression is not constant: " + to_string());
    return offset_;
}

WeightExpr WeightExpr::operator+(const WeightExpr& o) const {
    WeightExpr r = *this;
    r.offset_ += o.offset_;
    for (const auto& [j, a] : o.coeffs_) {
        long v = (r.coeffs_.count(j) ? r.coeffs_[j] : 0) + a;
        if (v == 0)
            r.coeffs_.erase(j);
        else
            r.coeffs_[j] = v;
    }
    return r;
}

WeightExpr WeightExpr::operator-(const WeightExpr& o) const { return *this + (-o); }

WeightExpr WeightExpr::operator-() const {
    WeightExpr r;
    r.offset_ = -offset_;
    for (const auto& [j, a] : coeffs_) r.coeffs_[j] = -a;
    return r;
}

WeightExpr WeightExpr::operator+(long c) const {
    WeightExpr r = *this;
    r.offset_ += c;
    return r;
}

WeightExpr WeightExpr::operator-(long c) const { return *this + (-c); }

WeightExpr WeightExpr::operator*(long s) const {
    WeightExpr r;
    if (s == 0) return r;
    r.offset_ = offset_ * s;
    for (const auto& [j, a] : coeffs_) r.coeffs_[j] = a * s;
    return r;
}

int WeightExpr::max_symbol() const {
    return coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
}

std::string WeightExpr::to_string(const std::vector<std::string>& names) const {
    std::string s;
    auto name_of = [&](int j) {
        if (j < static_cast<int>(names.size())) return names[j];
        return "mu" + std::to_string(j + 1);
    };
    for (const auto& [j, a] : coeffs_) {
        if (s.empty()) {
            if (a == -1)
                s += "-";
            else if (a != 1)
                s += std::to_string(a) + "*";
        } else {
            s += (a < 0) ? " - " : " + ";
            long m = a < 0 ? -a : a;
            if (m != 1) s += std::to_string(m) + "*";
        }
        s += name_of(j);
    }
    if (offset_ != 0 || s.empty()) {
        if (s.empty())
            s = std::to_string(offset_);
        else
            s += (offset_ < 0 ? " - " : " + ") + std::to_string(offset_ < 0 ? -offset_ : offset_);
    }
    return s;
}

}  // namespace vjw
