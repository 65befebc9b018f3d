#include "repur/csv.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "repur/error.hpp"
#include "repur/ext_real.hpp"

namespace repur {

namespace {

constexpr double kSpacingTol = 1e-8;

std::vector<double> split_row(const std::string& line, std::size_t line_no) {
    std::vector<double> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(cell, &used);
        } catch (const std::exception&) {
            fail(ErrorCode::Parse, "line " + std::to_string(line_no) + ": not a number: '" + cell + "'");
        }
        while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used]))) ++used;
        if (used != cell.size()) {
            fail(ErrorCode::Parse, "line " + std::to_string(line_no) + ": trailing characters in '" + cell + "'");
        }
        out.push_back(v);
    }
    return out;
}

Grid1D grid_from_coords(const std::vector<double>& x) {
    if (x.size() < Grid1D::kMinPoints) {
        fail(ErrorCode::InvalidArgument, "grid file has only " + std::to_string(x.size()) + " rows");
    }
    const double dx = (x.back() - x.front()) / static_cast<double>(x.size() - 1);
    if (!(dx > 0.0)) fail(ErrorCode::InvalidArgument, "grid coordinates must increase");
    for (std::size_t k = 1; k < x.size(); ++k) {
        if (std::abs((x[k] - x[k - 1]) - dx) > kSpacingTol * dx) {
            fail(ErrorCode::InvalidArgument, "grid is not uniform near row " + std::to_string(k + 1));
        }
    }
    return Grid1D(x.front(), dx, x.size());
}

}  // namespace

GridData read_grid_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) fail(ErrorCode::Parse, "empty grid file");
    std::vector<double> x, a, b;
    std::size_t cols = 0;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto row = split_row(line, line_no);
        if (cols == 0) {
            cols = row.size();
            if (cols != 2 && cols != 3) {
                fail(ErrorCode::Parse, "expected 2 or 3 columns, got " + std::to_string(cols));
            }
        } else if (row.size() != cols) {
            fail(ErrorCode::Parse, "line " + std::to_string(line_no) + ": column count changed");
        }
        x.push_back(row[0]);
        a.push_back(row[1]);
        if (cols == 3) b.push_back(row[2]);
    }
    const Grid1D grid = grid_from_coords(x);
    if (cols == 2) return SampledDensity(grid, std::move(a));
    return SampledAmplitude(grid, a, b);
}

GridData read_grid_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::Io, "cannot open " + path);
    return read_grid_csv(in);
}

void write_density_csv(std::ostream& out, const SampledDensity& d) {
    out << "x,value\n";
    for (std::size_t k = 0; k < d.size(); ++k) {
        out << format_number(d.grid()[k]) << ',' << format_number(d[k]) << '\n';
    }
}

void write_amplitude_csv(std::ostream& out, const SampledAmplitude& a) {
    out << "x,re,im\n";
    for (std::size_t k = 0; k < a.size(); ++k) {
        out << format_number(a.grid()[k]) << ',' << format_number(a[k].real()) << ','
            << format_number(a[k].imag()) << '\n';
    }
}

}  // namespace repur
