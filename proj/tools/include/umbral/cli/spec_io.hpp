#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include <umbral/discretize.hpp>
#include <umbral/fourier.hpp>
#include <umbral/galois.hpp>

namespace umbral::cli {

using Spec = std::variant<LinearOde, NonlinearOde, ConstLinearEq>;

// An equation plus optional sample data used by the residual command.
struct SpecDocument {
  Spec eq;
  std::optional<std::vector<Rational>> taylor;
  std::optional<std::vector<Rational>> lattice;

  friend bool operator==(const SpecDocument&, const SpecDocument&) = default;
};

/// Accepted shapes:
///   {"type":"linear","order":N,"coeffs":[[[m,"a"],...],...],"c0":[[r,"g"],...]}
///   {"type":"nonlinear","m":m,"coeffs":[[[m,"a"],...],...]}
///   {"type":"constant","order":N,"coeffs":["a_0",...,"a_{N-1}"]}
/// with optional "taylor" / "lattice" arrays of rational strings.
/// Throws SchemaError (with a JSON path) or RationalParseError.
SpecDocument parse_spec(const nlohmann::json& doc);
SpecDocument parse_spec_text(std::string_view text);

nlohmann::ordered_json serialize(const SpecDocument& doc);

/// Constant-coefficient view of a nonlinear equation; SchemaError when a
/// coefficient depends on t.
ConstNonlinearOde to_const_nonlinear(const NonlinearOde& eq);

/// y^{(N)} + a_{N-1} y^{(N-1)} + ... + a_0 y = 0 as a LinearOde.
LinearOde to_linear(const ConstLinearEq& eq);

}  // namespace umbral::cli
