#pragma once

#include <string>
#include <vector>

#include "cxd/sites.hpp"

namespace cxd {

struct SheafSides {
  SheafMap lhs, rhs;
  bool holds() const { return lhs == rhs; }
};

// How the sets of an instance are wired.
//   Map:    f : S0 -> S1
//   Chain2: f : S0 -> S1, g : S1 -> S2
//   Chain3: f, g as above, h : S2 -> S3
//   Square: S0 = V, S1 = X, S2 = Y, S3 = Z with fbar : V -> X, gbar : V -> Y, f : Y -> Z, g : X -> Z
enum class SiteShape { Map, Chain2, Chain3, Square };

struct SiteDiagramInfo {
  std::string id;
  SiteShape shape;
  std::vector<int> bases;  // set index of each object
  std::string statement;
  int weight;  // 0 light, 1 medium, 2 heavy; drives size caps
};

const std::vector<SiteDiagramInfo>& site_diagram_catalogue();
// nullptr when absent.
const SiteDiagramInfo* find_site_diagram(const std::string& id);

// Both legs. ctx.maps holds f (, g (, h)) in order; ctx.square for Square shapes.
// Throws std::invalid_argument on a bad id or context, AssumptionViolated when a needed inverse fails.
SheafSides site_diagram(const Sheaves& s, const std::string& id, const SiteContext& ctx);

struct SiteBounds {
  int max_set = 3;
  int max_len = 2;
  int max_dim = 2;
};

// Bounds after the per-weight caps.
SiteBounds capped(const SiteDiagramInfo& info, SiteBounds b);

SiteContext random_site_context(Rng& rng, const SiteDiagramInfo& info, const SiteBounds& bounds, int p = 3);

}  // namespace cxd
