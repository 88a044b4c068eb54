#pragma once

#include "latcover/certificate.hpp"
#include "latcover/interval.hpp"

#include <optional>
#include <string>

namespace latcover {

struct RenderOptions {
  long long window = 6;
  bool show_disks = true;
  bool show_points = true;
  bool show_centers = true;
  bool show_domain = true;
};

// Deterministic SVG 1.1: the certificate's window, dilated by the rational
// scale d. Unit disks around instance centers, dots on the scaled lattice
// points, optional fundamental domain. When `verified` is absent or does
// not contain d, a "not verified" banner is drawn. Byte-identical output
// for identical inputs.
std::string render_svg(const CoveringCertificate &cert, const Rat &d,
                       const RenderOptions &opt,
                       const std::optional<SqrtInterval> &verified);

}  // namespace latcover
