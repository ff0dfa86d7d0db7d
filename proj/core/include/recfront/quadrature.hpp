#pragma once

namespace recfront {

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;  // always >= 0
};

}  // namespace recfront
