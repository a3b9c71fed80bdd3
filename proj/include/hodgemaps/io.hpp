#pragma once

#include <string>
#include <vector>

#include "hodgemaps/exterior_derivative.hpp"
#include "hodgemaps/hodge_laplacian.hpp"
#include "hodgemaps/local_frames.hpp"
#include "hodgemaps/neighbors.hpp"

namespace hodgemaps {

// Shortest decimal form that round-trips the double (at most 17 significant
// digits).
std::string format_double(double v);

// Points CSV: one point per row, comma- or whitespace-separated columns,
// '#'-prefixed comment lines ignored, no header.
PointCloud read_points_csv(const std::string& path);
void write_points_csv(const std::string& path, const PointCloud& cloud);

// Frames file: header "N n d", then per point d lines of n floats (one frame
// column per line).
void write_frames(const std::string& path, const TangentFrameSet& frames);
TangentFrameSet read_frames(const std::string& path);

// Operator file: header "N d k t", then one line per stored block: "i j"
// followed by the C(d,k+1)*C(d,k) block entries row-major.
void write_operator(const std::string& path, const BlockSparseOperator& ed);
BlockSparseOperator read_operator(const std::string& path);

// One eigenvalue per line, descending.
void write_eigenvalues_csv(const std::string& path, const Eigen::VectorXd& eigenvalues);

// Embedding CSV: header "index,(1 1),(1 2),...,(m m)", per point the upper
// triangle of eta (row-major, l1 <= l2).
void write_embedding_csv(const std::string& path, const Embedding& embedding);

// Diagonal embedding CSV: header "index,(1 1),(2 2),...", per point the
// diagonal entries of eta.
void write_diagonal_csv(const std::string& path, const Embedding& embedding);

// Spectrum cache holding the leading eigenpairs, sufficient to re-embed with
// a different m or tm.
void write_spectrum_cache(const std::string& path, const HodgeSpectrum& spec, int keep);
HodgeSpectrum read_spectrum_cache(const std::string& path);

// Minimal scatter plot of (x, y) pairs.
void write_svg_scatter(const std::string& path, const std::vector<double>& x,
                       const std::vector<double>& y, const std::string& title);

}  // namespace hodgemaps
