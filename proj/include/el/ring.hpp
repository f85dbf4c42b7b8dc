#pragma once

#include <memory>
#include <string>
#include <vector>

#include "el/field.hpp"
#include "el/monomial.hpp"

namespace el {

/// Coefficient field, ordered variable names and the active monomial order.
template <class F>
class Ring {
 public:
  Ring(F field, std::vector<std::string> names, MonomialOrder order)
      : field_(std::move(field)), names_(std::move(names)), order_(order) {
    if (names_.size() > static_cast<std::size_t>(kMaxVars))
      throw InvalidInput("at most " + std::to_string(kMaxVars) + " variables supported");
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (names_[i] == names_[j]) throw InvalidInput("duplicate variable name '" + names_[i] + "'");
    if (order_.kind() == MonomialOrder::Kind::block &&
        (order_.block_size() < 0 || order_.block_size() > nvars()))
      throw InvalidInput("block order size out of range");
  }

  const F& field() const { return field_; }
  const std::vector<std::string>& names() const { return names_; }
  int nvars() const { return static_cast<int>(names_.size()); }
  const MonomialOrder& order() const { return order_; }

  int index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<int>(i);
    return -1;
  }

  int compare(const Monomial& a, const Monomial& b) const { return order_.compare(a, b, nvars()); }

  bool same_as(const Ring& other) const {
    return this == &other ||
           (field_ == other.field_ && names_ == other.names_ && order_ == other.order_);
  }

  std::shared_ptr<const Ring> with_order(MonomialOrder order) const {
    return std::make_shared<const Ring>(field_, names_, order);
  }

 private:
  F field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
};

template <class F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <class F>
RingPtr<F> make_ring(F field, std::vector<std::string> names,
                     MonomialOrder order = MonomialOrder::grevlex()) {
  return std::make_shared<const Ring<F>>(std::move(field), std::move(names), order);
}

/// names prefix0 .. prefix{count-1}
inline std::vector<std::string> indexed_names(const std::string& prefix, int count, int start = 0) {
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.push_back(prefix + std::to_string(start + i));
  return out;
}

}  // namespace el
