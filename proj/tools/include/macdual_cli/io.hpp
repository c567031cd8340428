#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "macdual/groebner.hpp"
#include "macdual/limit_system.hpp"

namespace macdual::cli {

struct IdealFile {
  RingPtr ring;
  Ideal ideal;
};

/// Overrides applied while building the ring.
struct RingOverrides {
  std::optional<Field> field;
  std::optional<OrderKind> order;
};

/// Line grammar:
///   field Q | field F<p>
///   ring local|graded vars <csv>
///   zvars <csv>
///   ideal:
///   <one polynomial per line>
/// `#` starts a comment. Errors carry line:column.
IdealFile parse_ideal_file(std::string_view text, const RingOverrides& overrides = {});
std::string print_ideal_file(const IdealFile& file);

std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);

nlohmann::json ring_to_json(const Ring& ring);

nlohmann::json limit_system_to_json(const LimitInverseSystem& system);
/// Rejects files whose family fails verify_lis unless `validate` is false.
LimitInverseSystem limit_system_from_json(const nlohmann::json& j, bool validate = true,
                                          const RingOverrides& overrides = {});

}  // namespace macdual::cli
