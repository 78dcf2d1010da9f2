#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "berge/graph.hpp"
#include "berge/limits.hpp"

namespace berge {

/// Stable sets A_0..A_{alpha*omega} and omega-cliques B_0..B_{alpha*omega} of
/// a minimally imperfect graph whose incidence matrices satisfy
/// A * B^T = J - I.
struct GasparyanCertificate {
  int n = 0;
  int alpha = 0;
  int omega = 0;
  std::vector<std::vector<int>> stable_sets;
  std::vector<std::vector<int>> cliques;

  int rows() const { return static_cast<int>(stable_sets.size()); }

  /// Row i is the incidence vector of stable_sets[i].
  Eigen::MatrixXi stable_matrix() const;
  /// Row i is the incidence vector of cliques[i].
  Eigen::MatrixXi clique_matrix() const;
};

/// Builds the certificate: an alpha-stable set A_0, the color classes of an
/// omega-coloring of G - s for each s in A_0, and for each A_i an
/// omega-clique of G - A_i. Every step is re-verified; a failed check raises
/// InternalInconsistency. Graphs that are not minimally imperfect raise
/// InvalidInput.
GasparyanCertificate gasparyan_certificate(const Graph& g, const Limits& limits = {});

/// Checks a certificate against g without trusting how it was produced.
/// Returns an empty string when valid, otherwise the first failed condition.
std::string verify_certificate(const Graph& g, const GasparyanCertificate& cert);

/// Line-based text form: "n", "alpha", "omega" headers then "A i: ..." and
/// "B i: ..." rows.
std::string format_certificate(const GasparyanCertificate& cert);
GasparyanCertificate parse_certificate(const std::string& text);

}  // namespace berge
