#include "macdual/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "macdual/error.hpp"

namespace macdual {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    const auto u = static_cast<unsigned char>(c);
    return std::islower(u) || std::isdigit(u) || c == '_';
  });
}

}  // namespace

Ring::Ring(Field field, std::vector<std::string> names, MonomialOrder order, RingMode mode,
           std::vector<std::size_t> z_block)
    : field_(field),
      names_(std::move(names)),
      order_(std::move(order)),
      mode_(mode),
      z_block_(std::move(z_block)) {
  if (names_.size() > kMaxVariables) {
    throw Error(ErrorKind::Usage, "at most 16 variables are supported");
  }
  if (order_.size() != names_.size()) {
    throw Error(ErrorKind::LengthMismatch, "monomial order size differs from variable count");
  }
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!valid_name(n)) {
      throw Error(ErrorKind::Parse, "invalid variable name '" + n +
                                        "' (lower-case identifier expected)");
    }
    if (!seen.insert(n).second) throw Error(ErrorKind::Parse, "duplicate variable '" + n + "'");
  }
  std::set<std::size_t> zs(z_block_.begin(), z_block_.end());
  if (zs.size() != z_block_.size()) throw Error(ErrorKind::Parse, "duplicate z-variable");
  for (auto z : z_block_) {
    if (z >= names_.size()) throw Error(ErrorKind::Parse, "z-variable index out of range");
  }
}

RingPtr Ring::make(Field field, std::vector<std::string> names, RingMode mode,
                   std::vector<std::string> z_names) {
  std::vector<std::size_t> z;
  for (const auto& zn : z_names) {
    auto it = std::find(names.begin(), names.end(), zn);
    if (it == names.end()) {
      throw Error(ErrorKind::Parse, "z-variable '" + zn + "' is not a ring variable");
    }
    z.push_back(static_cast<std::size_t>(it - names.begin()));
  }
  const auto n = names.size();
  return std::make_shared<const Ring>(field, std::move(names), MonomialOrder::grevlex(n), mode,
                                      std::move(z));
}

std::string Ring::dual_name(std::size_t i) const {
  std::string s = names_.at(i);
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::optional<std::size_t> Ring::dual_index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (dual_name(i) == name) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> Ring::y_block() const {
  std::vector<std::size_t> y;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (std::find(z_block_.begin(), z_block_.end(), i) == z_block_.end()) y.push_back(i);
  }
  return y;
}

RingPtr Ring::with_order(MonomialOrder order) const {
  return std::make_shared<const Ring>(field_, names_, std::move(order), mode_, z_block_);
}

RingPtr Ring::with_field(Field field) const {
  return std::make_shared<const Ring>(field, names_, order_, mode_, z_block_);
}

bool Ring::compatible(const Ring& other) const {
  return field_ == other.field_ && names_ == other.names_ && order_ == other.order_ &&
         mode_ == other.mode_;
}

bool operator==(const Ring& a, const Ring& b) {
  return a.compatible(b) && a.z_block_ == b.z_block_;
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return;
  if (!a || !b || !a->compatible(*b)) {
    throw Error(ErrorKind::ContextMismatch, "operands live in different rings");
  }
}

}  // namespace macdual
