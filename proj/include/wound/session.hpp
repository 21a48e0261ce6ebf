#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "wound/homs.hpp"

namespace wound {

/// The objects declared by one input file. All share one field; names are
/// unique across groups, extensions and maps.
///
/// Line-oriented format, `#` starts a comment:
///
///     field p=3 e=1 gen=a depth=0
///     params d e
///     relation pivot=d : d^(p^2) - d + a*e^(p^1)
///     group V vars=X,Y pivot=X : X^(p^2) - X + a*Y^(p^2)
///     extension U_a center=W_a base=V_a : h1 = X*X'^3 - X^3*X' ; h2 = X*Y'^3 - X'*Y^3
///     map phi from=V to=U : X -> d^3*X + d*X^3 ; Y -> e*X + d*Y^3
///
/// The `field` line is optional (default p = 3, e = 1, gen a, depth 0) but
/// must come first. `Ga` names the affine line, whose coordinate is T.
struct Session {
  FieldPtr field;
  ParamRing params;
  std::vector<HypersurfaceGroup> groups;
  std::vector<CocycleExtension> extensions;
  std::vector<PPolyMap> maps;

  const HypersurfaceGroup& group(const std::string& name) const;
  const CocycleExtension& extension(const std::string& name) const;
  const PPolyMap& map(const std::string& name) const;
  /// A group, or the line for "Ga".
  Endpoint endpoint(const std::string& name) const;

  /// Canonical serialization; parsing it gives back an equal session.
  std::string to_string() const;
};

Session parse_session(std::string_view text);
Session load_session(const std::filesystem::path& path);

}  // namespace wound
