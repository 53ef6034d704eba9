#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fho/classical.hpp"
#include "fho/experiments.hpp"

namespace fho {

/// Locale-independent decimal formatting, 17 significant digits.
std::string format_double(double v);

/// Header: t,P0,...,P{n-1},S,E,norm ; one row per sample.
void write_series_csv(const std::filesystem::path& path, const ObservableSeries& series);

/// Header: alpha,S_bar_K,S_bar_H,E_bar_K,E_bar_H ; failed rows carry nan
/// columns (their errors go to the manifest).
void write_sweep_csv(const std::filesystem::path& path, const SweepResult& sweep);

struct ClassicalSample {
    double t = 0.0, x = 0.0, v = 0.0, k = 0.0, w = 0.0;
};

/// Header: t,x,v,K,W
void write_classical_csv(const std::filesystem::path& path,
                         const std::vector<ClassicalSample>& samples);

}  // namespace fho
