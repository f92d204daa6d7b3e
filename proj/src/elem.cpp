#include "mhk/elem.hpp"

#include <atomic>
#include <stdexcept>

namespace mhk {

std::uint64_t Space::next_id() {
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1);
}

Elem Elem::delta(SpacePtr space, const BasisKey& key, Scalar c) {
    if (static_cast<int>(key.size()) != space->key_arity())
        throw std::invalid_argument("basis key arity mismatch for space " + space->name());
    Elem e(std::move(space));
    e.add_term(key, c);
    return e;
}

Scalar Elem::at(const BasisKey& key) const {
    auto it = coeff_.find(key);
    return it == coeff_.end() ? Scalar(0) : it->second;
}

KeySet Elem::support() const {
    KeySet s;
    for (const auto& [k, _] : coeff_) s.insert(k);
    return s;
}

void Elem::add_term(const BasisKey& key, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = coeff_.emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) coeff_.erase(it);
    }
}

Elem& Elem::operator+=(const Elem& o) {
    require_same_space(*this, o, "add");
    for (const auto& [k, c] : o.coeff_) add_term(k, c);
    return *this;
}

Elem& Elem::operator-=(const Elem& o) {
    require_same_space(*this, o, "subtract");
    for (const auto& [k, c] : o.coeff_) add_term(k, -c);
    return *this;
}

Elem operator*(const Scalar& c, Elem a) {
    if (c.is_zero()) {
        a.coeff_.clear();
        return a;
    }
    for (auto& [_, v] : a.coeff_) v *= c;
    return a;
}

bool operator==(const Elem& a, const Elem& b) {
    if (a.space_ && b.space_ && a.space_->id() != b.space_->id()) return false;
    return a.coeff_ == b.coeff_;
}

std::string Elem::str() const {
    if (coeff_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, c] : coeff_) {
        if (!first) s += " + ";
        first = false;
        if (!c.is_one()) s += c.str() + "*";
        s += "e[" + key_str(k) + "]";
    }
    return s;
}

void require_same_space(const Elem& a, const Elem& b, const char* what) {
    if (!a.space() || !b.space() || a.space()->id() != b.space()->id())
        throw std::invalid_argument(std::string("space mismatch in ") + what + ": " +
                                    (a.space() ? a.space()->name() : "<none>") + " vs " +
                                    (b.space() ? b.space()->name() : "<none>"));
}

BasisKey concat_keys(const BasisKey& a, const BasisKey& b) {
    BasisKey k = a;
    k.insert(k.end(), b.begin(), b.end());
    return k;
}

std::pair<BasisKey, BasisKey> split_key(const BasisKey& k, int left_arity) {
    return {BasisKey(k.begin(), k.begin() + left_arity),
            BasisKey(k.begin() + left_arity, k.end())};
}

}  // namespace mhk
