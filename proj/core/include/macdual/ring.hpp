#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "macdual/monomial.hpp"
#include "macdual/scalar.hpp"

namespace macdual {

enum class RingMode { Graded, Local };

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Coefficient field, variable names, active monomial order, and the
/// partition of the variables into a y-block and a z-block. The z-block
/// holds the variables cut out by Artinian reductions.
///
/// Dual variables share the indices of their ring variables and are spelled
/// with upper-case names (x -> X).
class Ring {
 public:
  Ring(Field field, std::vector<std::string> names, MonomialOrder order,
       RingMode mode = RingMode::Graded, std::vector<std::size_t> z_block = {});

  static RingPtr make(Field field, std::vector<std::string> names,
                      RingMode mode = RingMode::Graded,
                      std::vector<std::string> z_names = {});

  const Field& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::string dual_name(std::size_t i) const;
  std::optional<std::size_t> index_of(const std::string& name) const;
  std::optional<std::size_t> dual_index_of(const std::string& name) const;

  const MonomialOrder& order() const noexcept { return order_; }
  RingMode mode() const noexcept { return mode_; }
  bool is_local() const noexcept { return mode_ == RingMode::Local; }

  const std::vector<std::size_t>& z_block() const noexcept { return z_block_; }
  std::vector<std::size_t> y_block() const;
  std::size_t dimension() const noexcept { return z_block_.size(); }

  RingPtr with_order(MonomialOrder order) const;
  RingPtr with_field(Field field) const;

  /// Same variables, field, order and mode.
  bool compatible(const Ring& other) const;

  friend bool operator==(const Ring& a, const Ring& b);

 private:
  Field field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
  RingMode mode_;
  std::vector<std::size_t> z_block_;
};

/// Throws ContextMismatch unless a and b describe the same ring.
void require_same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace macdual
