#include "fho/io.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace fho {

std::string format_double(double v) {
    char buf[64];
    const std::to_chars_result res =
        std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    if (res.ec != std::errc{}) throw std::runtime_error("number formatting failed");
    return std::string(buf, res.ptr);
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    return out;
}

}  // namespace

void write_series_csv(const std::filesystem::path& path, const ObservableSeries& series) {
    std::ofstream out = open_out(path);
    const size_t n = series.probabilities.empty() ? 0 : series.probabilities.front().size();
    out << "t";
    for (size_t k = 0; k < n; ++k) out << ",P" << k;
    out << ",S,E,norm\n";
    for (size_t i = 0; i < series.t.size(); ++i) {
        out << format_double(series.t[i]);
        for (size_t k = 0; k < n; ++k) out << ',' << format_double(series.probabilities[i][k]);
        out << ',' << format_double(series.entropy_nats[i]);
        out << ',' << format_double(series.energy_joule[i]);
        out << ',' << format_double(series.norm[i]);
        out << '\n';
    }
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

void write_sweep_csv(const std::filesystem::path& path, const SweepResult& sweep) {
    std::ofstream out = open_out(path);
    out << "alpha,S_bar_K,S_bar_H,E_bar_K,E_bar_H\n";
    for (const SweepRow& row : sweep.rows) {
        out << format_double(row.alpha) << ',' << format_double(row.entropy_avg_k) << ','
            << format_double(row.entropy_avg_h) << ',' << format_double(row.energy_avg_k) << ','
            << format_double(row.energy_avg_h) << '\n';
    }
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

void write_classical_csv(const std::filesystem::path& path,
                         const std::vector<ClassicalSample>& samples) {
    std::ofstream out = open_out(path);
    out << "t,x,v,K,W\n";
    for (const ClassicalSample& s : samples) {
        out << format_double(s.t) << ',' << format_double(s.x) << ',' << format_double(s.v) << ','
            << format_double(s.k) << ',' << format_double(s.w) << '\n';
    }
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace fho
