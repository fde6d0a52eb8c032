#include "pielm/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace pielm {

namespace {

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  return out;
}

nlohmann::json gmm_to_json(const GmmParams& params) {
  return {{"mixing", params.mixing},
          {"means", params.means},
          {"variances", params.variances}};
}

GmmParams gmm_from_json(const nlohmann::json& j) {
  GmmParams params;
  params.mixing = j.at("mixing").get<std::vector<double>>();
  params.means = j.at("means").get<std::vector<double>>();
  params.variances = j.at("variances").get<std::vector<double>>();
  return params;
}

nlohmann::json record_to_json(const IterationRecord& rec, bool zero_timing) {
  nlohmann::json j{{"iteration", rec.iteration},
                   {"rmse", rec.rmse},
                   {"max_abs_residual", rec.max_abs_residual},
                   {"condition_number", rec.condition_number},
                   {"wall_time_s", zero_timing ? 0.0 : rec.wall_time_s},
                   {"adapted", rec.adapted},
                   {"centers", rec.centers},
                   {"widths", rec.widths}};
  j["gmm"] = rec.gmm ? gmm_to_json(*rec.gmm) : nlohmann::json(nullptr);
  return j;
}

IterationRecord record_from_json(const nlohmann::json& j) {
  IterationRecord rec;
  rec.iteration = j.at("iteration").get<int>();
  rec.rmse = j.at("rmse").get<double>();
  rec.max_abs_residual = j.at("max_abs_residual").get<double>();
  rec.condition_number = j.at("condition_number").get<double>();
  rec.wall_time_s = j.at("wall_time_s").get<double>();
  rec.adapted = j.at("adapted").get<bool>();
  if (!j.at("gmm").is_null()) rec.gmm = gmm_from_json(j.at("gmm"));
  rec.centers = j.at("centers").get<std::vector<double>>();
  rec.widths = j.at("widths").get<std::vector<double>>();
  return rec;
}

nlohmann::json report_to_json(const RunReport& report, bool zero_timing) {
  nlohmann::json trace = nlohmann::json::array();
  for (const IterationRecord& rec : report.trace)
    trace.push_back(record_to_json(rec, zero_timing));
  return {{"run_id", report.run_id},
          {"problem", report.problem},
          {"nu", report.nu},
          {"method", report.method},
          {"n_neurons", report.n_neurons},
          {"gmm_components", report.gmm_components},
          {"hybrid_ratio", report.hybrid_ratio},
          {"iterations", report.iterations},
          {"sigma_scaling", report.sigma_scaling},
          {"seed", report.seed},
          {"rmse", report.rmse},
          {"wall_time_s", zero_timing ? 0.0 : report.wall_time_s},
          {"condition_number", report.condition_number},
          {"trace", std::move(trace)}};
}

}  // namespace

double rmse(std::span<const double> predicted, std::span<const double> exact) {
  if (predicted.empty() || predicted.size() != exact.size())
    throw std::invalid_argument("rmse: inputs must be nonempty and equal-sized");
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    const double d = predicted[i] - exact[i];
    sum_sq += d * d;
  }
  return std::sqrt(sum_sq / static_cast<double>(predicted.size()));
}

nlohmann::json to_json(const RunReport& report) {
  return report_to_json(report, /*zero_timing=*/false);
}

RunReport run_report_from_json(const nlohmann::json& j) {
  RunReport report;
  report.run_id = j.at("run_id").get<std::string>();
  report.problem = j.at("problem").get<std::string>();
  report.nu = j.at("nu").get<double>();
  report.method = j.at("method").get<std::string>();
  report.n_neurons = j.at("n_neurons").get<int>();
  report.gmm_components = j.at("gmm_components").get<int>();
  report.hybrid_ratio = j.at("hybrid_ratio").get<double>();
  report.iterations = j.at("iterations").get<int>();
  report.sigma_scaling = j.at("sigma_scaling").get<double>();
  report.seed = j.at("seed").get<std::uint64_t>();
  report.rmse = j.at("rmse").get<double>();
  report.wall_time_s = j.at("wall_time_s").get<double>();
  report.condition_number = j.at("condition_number").get<double>();
  for (const nlohmann::json& rec : j.at("trace"))
    report.trace.push_back(record_from_json(rec));
  return report;
}

void write_report_json(const std::filesystem::path& path,
                       std::span<const RunReport> reports, bool zero_timing) {
  nlohmann::json array = nlohmann::json::array();
  for (const RunReport& report : reports)
    array.push_back(report_to_json(report, zero_timing));
  open_for_write(path) << array.dump(2) << '\n';
}

std::vector<RunReport> read_report_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  const nlohmann::json array = nlohmann::json::parse(in);
  std::vector<RunReport> reports;
  reports.reserve(array.size());
  for (const nlohmann::json& j : array)
    reports.push_back(run_report_from_json(j));
  return reports;
}

void write_solution_csv(const std::filesystem::path& path,
                        std::span<const double> xs,
                        std::span<const double> u_exact,
                        std::span<const double> u_pred,
                        std::span<const double> residual_weights) {
  const std::size_t n = xs.size();
  if (u_exact.size() != n || u_pred.size() != n || residual_weights.size() != n)
    throw std::invalid_argument("write_solution_csv: column length mismatch");
  std::ofstream out = open_for_write(path);
  out << "x,u_exact,u_pred,abs_error,residual_weight\n";
  for (std::size_t i = 0; i < n; ++i)
    out << fmt17(xs[i]) << ',' << fmt17(u_exact[i]) << ',' << fmt17(u_pred[i])
        << ',' << fmt17(std::abs(u_pred[i] - u_exact[i])) << ','
        << fmt17(residual_weights[i]) << '\n';
}

void write_centers_csv(const std::filesystem::path& path,
                       std::span<const IterationRecord> trace) {
  std::ofstream out = open_for_write(path);
  out << "center,width,iteration\n";
  for (const IterationRecord& rec : trace)
    for (std::size_t j = 0; j < rec.centers.size(); ++j)
      out << fmt17(rec.centers[j]) << ',' << fmt17(rec.widths[j]) << ','
          << rec.iteration << '\n';
}

}  // namespace pielm
