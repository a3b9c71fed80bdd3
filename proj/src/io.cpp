#include "hodgemaps/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hodgemaps {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    return in;
}

std::vector<double> parse_numbers(const std::string& line) {
    std::string cleaned = line;
    std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
    std::istringstream ss(cleaned);
    std::vector<double> vals;
    double v = 0.0;
    while (ss >> v) vals.push_back(v);
    return vals;
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

PointCloud read_points_csv(const std::string& path) {
    auto in = open_in(path);
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        auto vals = parse_numbers(line);
        if (vals.empty()) continue;
        if (!rows.empty() && vals.size() != rows.front().size())
            throw std::runtime_error("read_points_csv: ragged rows in '" + path + "'");
        rows.push_back(std::move(vals));
    }
    if (rows.empty()) throw std::runtime_error("read_points_csv: no data rows in '" + path + "'");
    PointCloud cloud(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            cloud(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    validate_cloud(cloud);
    return cloud;
}

void write_points_csv(const std::string& path, const PointCloud& cloud) {
    auto out = open_out(path);
    for (Eigen::Index i = 0; i < cloud.rows(); ++i) {
        for (Eigen::Index j = 0; j < cloud.cols(); ++j) {
            if (j) out << ',';
            out << format_double(cloud(i, j));
        }
        out << '\n';
    }
}

void write_frames(const std::string& path, const TangentFrameSet& frames) {
    auto out = open_out(path);
    out << frames.size() << ' ' << frames.ambient_dim << ' ' << frames.d << '\n';
    for (const auto& frame : frames.frames) {
        for (Eigen::Index c = 0; c < frame.cols(); ++c) {
            for (Eigen::Index r = 0; r < frame.rows(); ++r) {
                if (r) out << ' ';
                out << format_double(frame(r, c));
            }
            out << '\n';
        }
    }
}

TangentFrameSet read_frames(const std::string& path) {
    auto in = open_in(path);
    int N = 0, n = 0, d = 0;
    if (!(in >> N >> n >> d)) throw std::runtime_error("read_frames: bad header in '" + path + "'");
    TangentFrameSet frames;
    frames.d = d;
    frames.ambient_dim = n;
    frames.frames.resize(static_cast<std::size_t>(N));
    frames.raw_dims.assign(static_cast<std::size_t>(N), d);
    for (int i = 0; i < N; ++i) {
        Eigen::MatrixXd frame(n, d);
        for (int c = 0; c < d; ++c)
            for (int r = 0; r < n; ++r)
                if (!(in >> frame(r, c))) throw std::runtime_error("read_frames: truncated file '" + path + "'");
        frames.frames[static_cast<std::size_t>(i)] = std::move(frame);
    }
    return frames;
}

void write_operator(const std::string& path, const BlockSparseOperator& ed) {
    auto out = open_out(path);
    out << ed.N << ' ' << ed.d << ' ' << ed.order << ' ' << format_double(ed.t) << '\n';
    for (int i = 0; i < ed.N; ++i) {
        for (const auto& [j, block] : ed.rows[static_cast<std::size_t>(i)]) {
            out << i << ' ' << j;
            for (Eigen::Index r = 0; r < block.rows(); ++r)
                for (Eigen::Index c = 0; c < block.cols(); ++c) out << ' ' << format_double(block(r, c));
            out << '\n';
        }
    }
}

BlockSparseOperator read_operator(const std::string& path) {
    auto in = open_in(path);
    BlockSparseOperator ed;
    if (!(in >> ed.N >> ed.d >> ed.order >> ed.t))
        throw std::runtime_error("read_operator: bad header in '" + path + "'");
    ed.block_rows = static_cast<int>(binomial(ed.d, ed.order + 1));
    ed.block_cols = static_cast<int>(binomial(ed.d, ed.order));
    ed.rows.resize(static_cast<std::size_t>(ed.N));
    int i = 0, j = 0;
    while (in >> i >> j) {
        Eigen::MatrixXd block(ed.block_rows, ed.block_cols);
        for (int r = 0; r < ed.block_rows; ++r)
            for (int c = 0; c < ed.block_cols; ++c)
                if (!(in >> block(r, c))) throw std::runtime_error("read_operator: truncated block in '" + path + "'");
        ed.rows[static_cast<std::size_t>(i)].emplace_back(j, std::move(block));
    }
    return ed;
}

void write_eigenvalues_csv(const std::string& path, const Eigen::VectorXd& eigenvalues) {
    auto out = open_out(path);
    for (Eigen::Index l = 0; l < eigenvalues.size(); ++l) out << format_double(eigenvalues(l)) << '\n';
}

void write_embedding_csv(const std::string& path, const Embedding& embedding) {
    auto out = open_out(path);
    out << "index";
    for (int a = 1; a <= embedding.m; ++a)
        for (int b = a; b <= embedding.m; ++b) out << ",(" << a << ' ' << b << ')';
    out << '\n';
    for (int i = 0; i < embedding.size(); ++i) {
        out << i;
        const Eigen::MatrixXd& eta = embedding.eta[static_cast<std::size_t>(i)];
        for (int a = 0; a < embedding.m; ++a)
            for (int b = a; b < embedding.m; ++b) out << ',' << format_double(eta(a, b));
        out << '\n';
    }
}

void write_diagonal_csv(const std::string& path, const Embedding& embedding) {
    auto out = open_out(path);
    out << "index";
    for (int a = 1; a <= embedding.m; ++a) out << ",(" << a << ' ' << a << ')';
    out << '\n';
    for (int i = 0; i < embedding.size(); ++i) {
        out << i;
        const Eigen::MatrixXd& eta = embedding.eta[static_cast<std::size_t>(i)];
        for (int a = 0; a < embedding.m; ++a) out << ',' << format_double(eta(a, a));
        out << '\n';
    }
}

void write_spectrum_cache(const std::string& path, const HodgeSpectrum& spec, int keep) {
    keep = std::min(keep, spec.count());
    auto out = open_out(path);
    out << "hodgemaps-spectrum 1\n";
    out << spec.N << ' ' << spec.block_size << ' ' << spec.order << ' ' << spec.tm << ' '
        << format_double(spec.t) << ' ' << keep << '\n';
    for (int l = 0; l < keep; ++l) out << format_double(spec.eigenvalues(l)) << '\n';
    for (int l = 0; l < keep; ++l) {
        for (Eigen::Index r = 0; r < spec.eigenvectors.rows(); ++r) {
            if (r) out << ' ';
            out << format_double(spec.eigenvectors(r, l));
        }
        out << '\n';
    }
}

HodgeSpectrum read_spectrum_cache(const std::string& path) {
    auto in = open_in(path);
    std::string magic;
    int version = 0;
    if (!(in >> magic >> version) || magic != "hodgemaps-spectrum" || version != 1)
        throw std::runtime_error("read_spectrum_cache: '" + path + "' is not a spectrum cache");
    HodgeSpectrum spec;
    int keep = 0;
    if (!(in >> spec.N >> spec.block_size >> spec.order >> spec.tm >> spec.t >> keep))
        throw std::runtime_error("read_spectrum_cache: bad header in '" + path + "'");
    spec.eigenvalues.resize(keep);
    for (int l = 0; l < keep; ++l)
        if (!(in >> spec.eigenvalues(l))) throw std::runtime_error("read_spectrum_cache: truncated eigenvalues");
    spec.eigenvectors.resize(static_cast<Eigen::Index>(spec.N) * spec.block_size, keep);
    for (int l = 0; l < keep; ++l)
        for (Eigen::Index r = 0; r < spec.eigenvectors.rows(); ++r)
            if (!(in >> spec.eigenvectors(r, l)))
                throw std::runtime_error("read_spectrum_cache: truncated eigenvectors");
    return spec;
}

void write_svg_scatter(const std::string& path, const std::vector<double>& x,
                       const std::vector<double>& y, const std::string& title) {
    if (x.size() != y.size()) throw std::invalid_argument("write_svg_scatter: size mismatch");
    const double width = 640.0, height = 640.0, margin = 40.0;
    double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
    if (!x.empty()) {
        xmin = *std::min_element(x.begin(), x.end());
        xmax = *std::max_element(x.begin(), x.end());
        ymin = *std::min_element(y.begin(), y.end());
        ymax = *std::max_element(y.begin(), y.end());
    }
    const double xspan = xmax > xmin ? xmax - xmin : 1.0;
    const double yspan = ymax > ymin ? ymax - ymin : 1.0;

    auto out = open_out(path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\">\n";
    out << "<text x=\"" << margin << "\" y=\"20\" font-size=\"14\">" << title << "</text>\n";
    for (std::size_t p = 0; p < x.size(); ++p) {
        const double px = margin + (x[p] - xmin) / xspan * (width - 2 * margin);
        const double py = height - margin - (y[p] - ymin) / yspan * (height - 2 * margin);
        out << "<circle cx=\"" << px << "\" cy=\"" << py << "\" r=\"2\" fill=\"#1f77b4\"/>\n";
    }
    out << "</svg>\n";
}

}  // namespace hodgemaps
