#include "ringlab/finite_ring.hpp"

#include <cmath>
#include <utility>

#include "ringlab/error.hpp"

namespace ringlab {

namespace {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Greedy Z/p basis of the additive group; nullopt when the group is not elementary abelian.
std::optional<LinearStructure> derive_linear(const FiniteRing& ring, unsigned p) {
    LinearStructure ls;
    ls.p = p;
    ls.from_index = {0};
    ls.to_index.assign(ring.size(), UINT32_MAX);
    ls.to_index[0] = 0;
    for (std::size_t h = 1; h < ring.size() && ls.from_index.size() < ring.size(); ++h) {
        if (ls.to_index[h] != UINT32_MAX) continue;
        auto e = static_cast<Elem>(h);
        auto old = ls.from_index.size();
        std::vector<Elem> grown(old * p);
        for (std::size_t i = 0; i < old; ++i) {
            Elem acc = ls.from_index[i];
            for (unsigned c = 0; c < p; ++c) {
                auto idx = static_cast<std::uint32_t>(c * old + i);
                if (c > 0) {
                    if (ls.to_index[acc] != UINT32_MAX) return std::nullopt;
                    ls.to_index[acc] = idx;
                }
                grown[idx] = acc;
                acc = ring.add(acc, e);
            }
            if (acc != ls.from_index[i]) return std::nullopt;
        }
        ls.from_index = std::move(grown);
        ls.basis.push_back(e);
        ++ls.dim;
    }
    if (ls.from_index.size() != ring.size()) return std::nullopt;
    return ls;
}

}  // namespace

FiniteRing::FiniteRing(std::string id, std::size_t size, std::vector<Elem> add, std::vector<Elem> mul, Elem one,
                       std::vector<std::string> names, Origin origin)
    : id_(std::move(id)),
      size_(size),
      add_(std::move(add)),
      mul_(std::move(mul)),
      one_(one),
      names_(std::move(names)),
      origin_(std::move(origin)) {
    finish_setup();
    if (characteristic_ != 0 && is_prime(characteristic_)) linear_ = derive_linear(*this, characteristic_);
}

FiniteRing::FiniteRing(std::string id, PrimeAlgebraData algebra, std::vector<Elem> add, std::vector<Elem> mul,
                       Elem one, std::vector<std::string> names, Origin origin)
    : id_(std::move(id)),
      size_(add.empty() ? 0 : static_cast<std::size_t>(std::sqrt(static_cast<double>(add.size())) + 0.5)),
      add_(std::move(add)),
      mul_(std::move(mul)),
      one_(one),
      names_(std::move(names)),
      origin_(std::move(origin)),
      algebra_(std::move(algebra)) {
    finish_setup();
    LinearStructure ls;
    ls.p = algebra_->p;
    ls.dim = algebra_->dim;
    ls.from_index.resize(size_);
    ls.to_index.resize(size_);
    for (std::size_t i = 0; i < size_; ++i) {
        ls.from_index[i] = static_cast<Elem>(i);
        ls.to_index[i] = static_cast<std::uint32_t>(i);
    }
    std::size_t stride = 1;
    for (unsigned t = 0; t < ls.dim; ++t, stride *= ls.p) ls.basis.push_back(static_cast<Elem>(stride));
    linear_ = std::move(ls);
}

void FiniteRing::finish_setup() {
    if (size_ == 0) throw ContractError("ring must have at least one element");
    if (add_.size() != size_ * size_ || mul_.size() != size_ * size_)
        throw ContractError("operation table size mismatch for " + id_);
    if (names_.size() != size_) {
        names_.resize(size_);
        for (std::size_t i = 0; i < size_; ++i) names_[i] = "#" + std::to_string(i);
    }
    neg_.assign(size_, 0);
    for (std::size_t a = 0; a < size_; ++a)
        for (std::size_t b = 0; b < size_; ++b)
            if (add(static_cast<Elem>(a), static_cast<Elem>(b)) == 0) {
                neg_[a] = static_cast<Elem>(b);
                break;
            }
    Elem acc = one_;
    for (std::size_t n = 1; n <= size_; ++n) {
        if (acc == 0) {
            characteristic_ = static_cast<unsigned>(n);
            break;
        }
        acc = add(acc, one_);
    }
    if (size_ == 1) characteristic_ = 1;
}

Elem FiniteRing::pow(Elem a, unsigned k) const noexcept {
    Elem r = one_;
    for (unsigned i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

Elem FiniteRing::times(Elem a, unsigned n) const noexcept {
    Elem r = 0;
    for (unsigned i = 0; i < n; ++i) r = add(r, a);
    return r;
}

}  // namespace ringlab
