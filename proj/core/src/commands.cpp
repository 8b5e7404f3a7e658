#include "btcarima/commands.hpp"

#include "btcarima/adf.hpp"
#include "btcarima/autocorrelation.hpp"
#include "btcarima/errors.hpp"
#include "btcarima/eval_harness.hpp"
#include "btcarima/fetch.hpp"
#include "btcarima/model_grid.hpp"
#include "btcarima/report_io.hpp"
#include "btcarima/seeding.hpp"
#include "btcarima/svg_plot.hpp"
#include "btcarima/transforms.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <ostream>

namespace btcarima {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kReportVersion = "1";

Json number(double v) {
  if (!std::isfinite(v)) {
    return nullptr;
  }
  return round_significant(v);
}

std::string order_pqd(const ArimaOrder& o) {
  return "(" + std::to_string(o.p) + "," + std::to_string(o.q) + "," + std::to_string(o.d) + ")";
}

std::string order_pdq(const ArimaOrder& o) {
  return "(" + std::to_string(o.p) + "," + std::to_string(o.d) + "," + std::to_string(o.q) + ")";
}

Json order_json(const ArimaOrder& o) {
  return Json{{"p", o.p}, {"q", o.q}, {"d", o.d}, {"pqd", order_pqd(o)}, {"pdq", order_pdq(o)}};
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) {
    return std::string(s);
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') {
      out += '"';
    }
    out += c;
  }
  out += '"';
  return out;
}

class CsvWriter {
public:
  explicit CsvWriter(std::initializer_list<std::string_view> header) { row(header); }

  void row(std::initializer_list<std::string_view> fields) {
    bool first = true;
    for (auto f : fields) {
      if (!first) {
        text_ += ',';
      }
      first = false;
      text_ += csv_field(f);
    }
    text_ += '\n';
  }

  [[nodiscard]] const std::string& text() const noexcept { return text_; }

private:
  std::string text_;
};

std::string str(std::size_t v) { return std::to_string(v); }
std::string str(int v) { return std::to_string(v); }
std::string str(bool v) { return v ? "true" : "false"; }

struct Context {
  const RunConfig& config;
  std::ostream& log;
  TimeSeries prices;
  std::string dataset_sha256;
};

class Outputs {
public:
  Outputs(const RunConfig& config, std::ostream& log) : config_(config), log_(log) {
    std::error_code ec;
    std::filesystem::create_directories(config.output_dir, ec);
    if (ec || !std::filesystem::is_directory(config.output_dir)) {
      throw IoError("cannot create output directory " + config.output_dir.string());
    }
  }

  void csv(const std::string& name, const CsvWriter& writer) {
    if (config_.formats.csv) {
      write(name, writer.text());
    }
  }
  void svg(const std::string& name, const PlotSpec& plot) {
    if (config_.formats.svg) {
      write(name, render_svg(plot));
    }
  }
  void json(const Json& report) {
    if (config_.formats.json) {
      write("report.json", report.dump(2) + "\n");
    }
  }

private:
  void write(const std::string& name, const std::string& content) {
    const auto path = config_.output_dir / name;
    write_file_atomic(path, content);
    log_ << "wrote " << path.string() << "\n";
  }

  const RunConfig& config_;
  std::ostream& log_;
};

Json fit_config_json(const FitConfig& fit) {
  Json inits = Json::array();
  for (auto i : fit.initialization) {
    inits.push_back(i == FitInitialization::zeros ? "zeros" : "hannan_rissanen");
  }
  return Json{{"max_iterations", fit.max_iterations},
              {"tolerance", fit.tolerance},
              {"initialization", inits}};
}

Json report_header(const Context& ctx) {
  const auto& c = ctx.config;
  Json formats = Json::array();
  if (c.formats.csv) formats.push_back("csv");
  if (c.formats.json) formats.push_back("json");
  if (c.formats.svg) formats.push_back("svg");
  Json config{{"w", c.w},
              {"locations", c.locations},
              {"reps", c.reps},
              {"region", region_name(c.region)},
              {"pq_rule", c.pq_rule},
              {"order", c.order ? order_json(*c.order) : Json(nullptr)},
              {"adf_max_lag", c.adf_max_lag},
              {"acf_lags", c.acf_lags},
              {"fit", fit_config_json(c.fit)},
              {"formats", formats}};
  return Json{
      {"report_version", kReportVersion},
      {"command", command_name(c.command)},
      {"seed", c.seed},
      {"dataset",
       {{"path", c.dataset.path.string()},
        {"sha256", ctx.dataset_sha256},
        {"start", format_iso_date(c.dataset.start_date)},
        {"span_days", c.dataset.span_days},
        {"fill_policy", c.dataset.fill_policy == FillPolicy::error ? "error" : "forward_fill"},
        {"rows", ctx.prices.size()},
        {"first_date", format_iso_date(ctx.prices.start())},
        {"last_date", format_iso_date(ctx.prices.last_date())}}},
      {"config", config}};
}

Json entry_json(const GridEntry& e) {
  return Json{{"index", e.index},
              {"order", order_json(e.order)},
              {"status", status_name(e.status)},
              {"metric", e.metric ? number(*e.metric) : Json(nullptr)}};
}

Json adf_json(const AdfResult& r) {
  return Json{{"statistic", number(r.statistic)},
              {"p_value", number(r.p_value)},
              {"lags_used", r.lags_used},
              {"nobs", r.nobs},
              {"critical_values",
               {{"1%", number(r.critical_values.one_pct)},
                {"5%", number(r.critical_values.five_pct)},
                {"10%", number(r.critical_values.ten_pct)}}}};
}

std::vector<double> iota_doubles(std::size_t n, double first = 0.0) {
  std::vector<double> out(n);
  std::iota(out.begin(), out.end(), first);
  return out;
}

GridOptions grid_options(const RunConfig& c) { return GridOptions{c.pq_rule, c.threads}; }

EvalConfig eval_config(const RunConfig& c, std::size_t w) {
  EvalConfig eval;
  eval.window_len = w;
  eval.num_locations = c.locations;
  eval.reps = c.reps;
  eval.region = c.region;
  eval.master_seed = c.seed;
  eval.validate();
  return eval;
}

std::size_t single_w(const RunConfig& c) {
  if (c.w.size() != 1) {
    throw InvalidConfig(std::string(command_name(c.command)) + " takes a single --w value");
  }
  return c.w.front();
}

void run_preprocess(Context& ctx, Outputs& out) {
  const auto& c = ctx.config;
  const auto raw = ctx.prices.values();
  const auto logs = log_values(raw);
  const auto log_diff = difference_values(logs, 1).values;

  const auto adf_raw = adf_test(raw, c.adf_max_lag);
  const auto adf_log = adf_test(logs, c.adf_max_lag);
  const auto adf_diff = adf_test(log_diff, c.adf_max_lag);

  const int lags = std::min<int>(c.acf_lags, static_cast<int>(log_diff.size()) - 1);
  const auto acf_log = acf(logs, lags);
  const auto pacf_log = pacf(logs, lags);
  const auto acf_diff = acf(log_diff, lags);
  const auto pacf_diff = pacf(log_diff, lags);

  CsvWriter series({"day", "date", "close", "log_close", "log_diff"});
  for (std::size_t i = 0; i < raw.size(); ++i) {
    series.row({str(i), format_iso_date(ctx.prices.date_at(i)), format_number(raw[i]),
                format_number(logs[i]), i == 0 ? std::string() : format_number(log_diff[i - 1])});
  }
  out.csv("preprocess_series.csv", series);

  CsvWriter corr({"lag", "acf_log", "pacf_log", "acf_log_diff", "pacf_log_diff"});
  for (int k = 0; k <= lags; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    corr.row({str(k), format_number(acf_log[uk]),
              k == 0 ? std::string("1") : format_number(pacf_log[uk - 1]),
              format_number(acf_diff[uk]),
              k == 0 ? std::string("1") : format_number(pacf_diff[uk - 1])});
  }
  out.csv("preprocess_acf.csv", corr);

  CsvWriter adf({"series", "statistic", "p_value", "lags_used", "nobs", "crit_1pct", "crit_5pct",
                 "crit_10pct"});
  for (const auto& [name, r] : {std::pair<std::string_view, const AdfResult&>{"raw", adf_raw},
                                {"log", adf_log},
                                {"log_diff", adf_diff}}) {
    adf.row({name, format_number(r.statistic), format_number(r.p_value), str(r.lags_used),
             str(r.nobs), format_number(r.critical_values.one_pct),
             format_number(r.critical_values.five_pct),
             format_number(r.critical_values.ten_pct)});
  }
  out.csv("preprocess_adf.csv", adf);

  const auto days = iota_doubles(raw.size());
  out.svg("fig1_raw.svg", PlotSpec{"Daily close", "day", "USD", false,
                                   {{"close", days, {raw.begin(), raw.end()}}}});
  out.svg("fig2_log.svg", PlotSpec{"Log of daily close", "day", "log USD", false,
                                   {{"log close", days, logs}}});
  out.svg("fig3_log_diff.svg",
          PlotSpec{"First difference of log close", "day", "log return", false,
                   {{"log diff", iota_doubles(log_diff.size(), 1.0), log_diff}}});
  const auto lag_axis = iota_doubles(static_cast<std::size_t>(lags) + 1);
  std::vector<double> pacf_plot{1.0};
  pacf_plot.insert(pacf_plot.end(), pacf_diff.begin(), pacf_diff.end());
  out.svg("fig4_acf_pacf.svg",
          PlotSpec{"ACF / PACF of log-differenced close", "lag", "correlation", false,
                   {{"ACF", lag_axis, acf_diff, true}, {"PACF", lag_axis, pacf_plot, true}}});

  auto report = report_header(ctx);
  const double band = 2.0 / std::sqrt(static_cast<double>(log_diff.size()));
  std::size_t outside = 0;
  for (std::size_t k = 1; k < acf_diff.size(); ++k) {
    outside += std::abs(acf_diff[k]) > band ? 1 : 0;
  }
  report["results"] = Json{{"adf", {{"raw", adf_json(adf_raw)},
                                    {"log", adf_json(adf_log)},
                                    {"log_diff", adf_json(adf_diff)}}},
                           {"acf_lags", lags},
                           {"log_diff_acf_band", number(band)},
                           {"log_diff_acf_lags_outside_band", outside}};
  out.json(report);
  ctx.log << "ADF p-values: raw " << format_number(adf_raw.p_value) << ", log "
          << format_number(adf_log.p_value) << ", log-diff " << format_number(adf_diff.p_value)
          << "\n";
}

std::size_t count_status(const GridReport& r, EntryStatus s) {
  return static_cast<std::size_t>(std::count_if(r.entries.begin(), r.entries.end(),
                                                [&](const GridEntry& e) { return e.status == s; }));
}

Json grid_summary(const GridReport& r) {
  return Json{{"strategy", strategy_name(r.strategy)},
              {"ok", count_status(r, EntryStatus::ok)},
              {"excluded_by_pq_rule", count_status(r, EntryStatus::excluded_by_pq_rule)},
              {"fit_failed", count_status(r, EntryStatus::fit_failed)},
              {"best", r.best ? entry_json(*r.best) : Json(nullptr)}};
}

PlotSpec grid_plot(const GridReport& r, std::string title, std::string y_label) {
  PlotSeries s{std::move(y_label), {}, {}, true};
  for (const auto& e : r.entries) {
    s.x.push_back(e.index);
    s.y.push_back(e.metric ? *e.metric : std::nan(""));
  }
  auto label = s.label;
  return PlotSpec{std::move(title), "model index 30p+3q+d", std::move(label), true, {std::move(s)}};
}

GridReport fit_grid(Context& ctx) {
  ctx.log << "fitting " << (ctx.config.pq_rule ? "p>=q" : "full") << " grid on "
          << ctx.prices.size() << " days\n";
  return rss_grid_search(ctx.prices.values(), ctx.config.fit, grid_options(ctx.config));
}

void run_grid_rss(Context& ctx, Outputs& out) {
  const auto report = fit_grid(ctx);
  CsvWriter csv({"index", "p", "q", "d", "order_pqd", "order_pdq", "status", "rss",
                 "innovation_variance", "converged", "invertible", "detail"});
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    const auto& e = report.entries[i];
    const auto& m = report.models[i];
    csv.row({str(e.index), str(e.order.p), str(e.order.q), str(e.order.d), order_pqd(e.order),
             order_pdq(e.order), status_name(e.status), e.metric ? format_number(*e.metric) : "",
             m ? format_number(m->innovation_variance) : "", m ? str(m->converged) : "",
             m ? str(m->invertible) : "", e.detail});
  }
  out.csv("fig5_rss.csv", csv);
  out.svg("fig5_rss.svg", grid_plot(report, "RSS by model index", "RSS"));

  auto json = report_header(ctx);
  auto results = grid_summary(report);
  if (report.best) {
    const auto& m = *report.models[static_cast<std::size_t>(report.best->index)];
    results["best_innovation_variance"] = number(m.innovation_variance);
  }
  if (report.entries.front().metric) {
    results["baseline_rss"] = number(*report.entries.front().metric);
  }
  json["results"] = results;
  out.json(json);
  if (report.best) {
    ctx.log << "RSS winner: index " << report.best->index << " (p,q,d)="
            << order_pqd(report.best->order) << " rss " << format_number(*report.best->metric)
            << "\n";
  }
}

Json windows_json(const std::vector<std::size_t>& starts) {
  Json arr = Json::array();
  for (auto s : starts) {
    arr.push_back(s);
  }
  return arr;
}

void run_grid_mse(Context& ctx, Outputs& out) {
  const auto w = single_w(ctx.config);
  const auto eval = eval_config(ctx.config, w);
  const auto starts = sample_windows(ctx.prices.size(), eval);
  const auto fitted = fit_grid(ctx);
  ctx.log << "scoring " << count_status(fitted, EntryStatus::ok) << " models over "
          << starts.size() << " windows x " << eval.reps << " reps (w=" << w << ")\n";
  const auto scored = score_by_mse(fitted, ctx.prices.values(), eval, ctx.config.threads);

  CsvWriter csv({"index", "p", "q", "d", "order_pqd", "order_pdq", "status", "mse", "fit_rss",
                 "detail"});
  for (std::size_t i = 0; i < scored.entries.size(); ++i) {
    const auto& e = scored.entries[i];
    const auto& f = fitted.entries[i];
    csv.row({str(e.index), str(e.order.p), str(e.order.q), str(e.order.d), order_pqd(e.order),
             order_pdq(e.order), status_name(e.status), e.metric ? format_number(*e.metric) : "",
             f.metric ? format_number(*f.metric) : "", e.detail});
  }
  out.csv("fig6_mse.csv", csv);
  out.svg("fig6_mse.svg", grid_plot(scored, "Backtest MSE by model index (w=" + str(w) + ")",
                                    "MSE (USD^2)"));

  auto json = report_header(ctx);
  auto results = grid_summary(scored);
  results["window_starts"] = windows_json(starts);
  results["rss_best"] = fitted.best ? entry_json(*fitted.best) : Json(nullptr);
  if (fitted.best && scored.best) {
    const auto& rss_entry = scored.entries[static_cast<std::size_t>(fitted.best->index)];
    results["rss_best_mse"] = rss_entry.metric ? number(*rss_entry.metric) : Json(nullptr);
    if (rss_entry.metric && *scored.best->metric > 0.0) {
      results["rss_to_mse_winner_ratio"] = number(*rss_entry.metric / *scored.best->metric);
    }
  }
  json["results"] = results;
  out.json(json);
  if (scored.best) {
    ctx.log << "MSE winner: index " << scored.best->index << " (p,q,d)="
            << order_pqd(scored.best->order) << " mse " << format_number(*scored.best->metric)
            << "\n";
  }
}

void run_eval_locations(Context& ctx, Outputs& out) {
  const auto w = single_w(ctx.config);
  const auto prices = ctx.prices.values();
  ArimaModel model;
  int index = 0;
  if (ctx.config.order) {
    index = model_index(*ctx.config.order);
    model = fit(*ctx.config.order, log_values(prices), ctx.config.fit);
  } else {
    const auto eval = eval_config(ctx.config, w);
    const auto scored = score_by_mse(fit_grid(ctx), prices, eval, ctx.config.threads);
    if (!scored.best) {
      throw OptimizerFailure("no grid entry produced a finite backtest MSE");
    }
    index = scored.best->index;
    model = *scored.models[static_cast<std::size_t>(index)];
  }
  ctx.log << "location sweep for (p,q,d)=" << order_pqd(model.order) << " w=" << w << "\n";
  const auto seed = derive_seed(ctx.config.seed, static_cast<std::uint64_t>(index));
  const auto curve = mse_by_location(model, prices, w, ctx.config.reps, seed);

  CsvWriter csv({"day_index", "date", "window_start", "mse"});
  for (std::size_t i = 0; i < curve.mse.size(); ++i) {
    csv.row({str(curve.day_index[i]), format_iso_date(ctx.prices.date_at(curve.day_index[i])),
             str(curve.day_index[i] - w), format_number(curve.mse[i])});
  }
  out.csv("fig7_location.csv", csv);
  std::vector<double> xs(curve.day_index.begin(), curve.day_index.end());
  out.svg("fig7_location.svg",
          PlotSpec{"Backtest MSE by window location (w=" + str(w) + ", " + order_pqd(model.order) +
                       " p,q,d)",
                   "day since " + format_iso_date(ctx.prices.start()), "MSE (USD^2)", true,
                   {{"MSE", xs, curve.mse}}});

  const std::size_t half = ctx.prices.size() / 2;
  double first_sum = 0.0;
  double second_sum = 0.0;
  std::size_t first_n = 0;
  std::size_t second_n = 0;
  for (std::size_t i = 0; i < curve.mse.size(); ++i) {
    if (curve.day_index[i] < half) {
      first_sum += curve.mse[i];
      ++first_n;
    } else {
      second_sum += curve.mse[i];
      ++second_n;
    }
  }
  const auto max_it = std::max_element(curve.mse.begin(), curve.mse.end());
  const auto max_day = curve.day_index[static_cast<std::size_t>(max_it - curve.mse.begin())];
  auto json = report_header(ctx);
  json["results"] = Json{
      {"model", {{"index", index},
                 {"order", order_json(model.order)},
                 {"ar", model.ar_coeffs},
                 {"ma", model.ma_coeffs},
                 {"intercept", number(model.intercept)},
                 {"innovation_variance", number(model.innovation_variance)}}},
      {"locations", curve.mse.size()},
      {"max_mse", number(*max_it)},
      {"max_day_index", max_day},
      {"max_date", format_iso_date(ctx.prices.date_at(max_day))},
      {"first_half_mean_mse", first_n ? number(first_sum / first_n) : Json(nullptr)},
      {"second_half_mean_mse", second_n ? number(second_sum / second_n) : Json(nullptr)}};
  for (auto& v : json["results"]["model"]["ar"]) {
    v = number(v.get<double>());
  }
  for (auto& v : json["results"]["model"]["ma"]) {
    v = number(v.get<double>());
  }
  out.json(json);
}

void run_sweep_w(Context& ctx, Outputs& out) {
  for (const auto w : ctx.config.w) {
    (void)eval_config(ctx.config, w);
  }
  const auto fitted = fit_grid(ctx);
  const auto rows = sweep_from_grid(fitted, ctx.prices.values(), ctx.config.w,
                                    eval_config(ctx.config, ctx.config.w.front()),
                                    ctx.config.threads);

  CsvWriter csv({"w", "rss_index", "rss_order_pqd", "rss_order_pdq", "mse_index", "mse_order_pqd",
                 "mse_order_pdq", "avg_mse", "status", "error"});
  Json json_rows = Json::array();
  PlotSeries series{"avg MSE of MSE winner", {}, {}, false};
  for (const auto& r : rows) {
    csv.row({str(r.w), r.ok ? str(r.rss_best_index) : "",
             r.ok ? order_pqd(r.rss_best_order) : "", r.ok ? order_pdq(r.rss_best_order) : "",
             r.ok ? str(r.mse_best_index) : "", r.ok ? order_pqd(r.mse_best_order) : "",
             r.ok ? order_pdq(r.mse_best_order) : "", r.ok ? format_number(r.avg_mse) : "",
             r.ok ? "ok" : "failed", r.error});
    Json row{{"w", r.w}, {"region", region_name(r.region)}, {"ok", r.ok}};
    if (r.ok) {
      Json window_mse = Json::array();
      for (double v : r.window_mse) {
        window_mse.push_back(number(v));
      }
      row["rss_best_index"] = r.rss_best_index;
      row["rss_best_order"] = order_json(r.rss_best_order);
      row["mse_best_index"] = r.mse_best_index;
      row["mse_best_order"] = order_json(r.mse_best_order);
      row["avg_mse"] = number(r.avg_mse);
      row["window_mse"] = window_mse;
      series.x.push_back(static_cast<double>(r.w));
      series.y.push_back(r.avg_mse);
    } else {
      row["error"] = r.error;
    }
    json_rows.push_back(row);
  }
  const std::string table = ctx.config.region == Region::full_span ? "table1" : "table2";
  out.csv(table + ".csv", csv);
  out.svg(table + ".svg", PlotSpec{"Average MSE of the MSE-selected model vs window length (" +
                                       std::string(region_name(ctx.config.region)) + ")",
                                   "w", "MSE (USD^2)", true, {series}});
  auto json = report_header(ctx);
  json["results"] = Json{{"rss_best", fitted.best ? entry_json(*fitted.best) : Json(nullptr)},
                         {"rows", json_rows}};
  out.json(json);
}

void run_fetch(const RunConfig& c, std::ostream& log) {
  FetchRequest request;
  request.endpoint_url = c.fetch_url;
  if (request.endpoint_url.empty()) {
    if (const char* env = std::getenv(kFetchUrlEnv)) {
      request.endpoint_url = env;
    }
  }
  request.api_key = c.api_key;
  if (request.api_key.empty()) {
    if (const char* env = std::getenv(kApiKeyEnv)) {
      request.api_key = env;
    }
  }
  request.start = c.dataset.start_date;
  request.end = c.dataset.start_date + std::chrono::days(c.dataset.span_days - 1);
  request.output = c.dataset.path;
  if (request.output.empty()) {
    throw InvalidConfig("fetch needs --data <path> for the downloaded CSV");
  }
  const auto rows = fetch_prices(request);
  log << "wrote " << rows << " rows to " << request.output.string() << "\n";
}

} // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (auto c : {Command::preprocess, Command::grid_rss, Command::grid_mse,
                 Command::eval_locations, Command::sweep_w, Command::fetch}) {
    if (command_name(c) == name) {
      return c;
    }
  }
  return std::nullopt;
}

std::string_view command_name(Command command) noexcept {
  switch (command) {
  case Command::preprocess: return "preprocess";
  case Command::grid_rss: return "grid-rss";
  case Command::grid_mse: return "grid-mse";
  case Command::eval_locations: return "eval-locations";
  case Command::sweep_w: return "sweep-w";
  case Command::fetch: return "fetch";
  }
  return "unknown";
}

OutputFormats parse_formats(std::string_view text) {
  OutputFormats f{false, false, false};
  bool any = false;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    text.remove_prefix(comma == std::string_view::npos ? text.size() : comma + 1);
    if (item == "csv") {
      f.csv = true;
    } else if (item == "json") {
      f.json = true;
    } else if (item == "svg") {
      f.svg = true;
    } else {
      throw InvalidConfig("unknown output format '" + std::string(item) + "'");
    }
    any = true;
  }
  if (!any) {
    throw InvalidConfig("at least one output format is required");
  }
  return f;
}

void execute(const RunConfig& config, std::ostream& log) {
  if (config.command == Command::fetch) {
    run_fetch(config, log);
    return;
  }
  if (!config.formats.csv && !config.formats.json && !config.formats.svg) {
    throw InvalidConfig("at least one output format is required");
  }
  if (config.w.empty()) {
    throw InvalidConfig("at least one window length is required");
  }
  const auto bytes = read_file(config.dataset.path);
  Context ctx{config, log,
              parse_price_csv(bytes, config.dataset,
                              [&](const std::string& msg) { log << "warning: " << msg << "\n"; }),
              sha256_hex(bytes)};
  Outputs out(config, log);
  switch (config.command) {
  case Command::preprocess: run_preprocess(ctx, out); break;
  case Command::grid_rss: run_grid_rss(ctx, out); break;
  case Command::grid_mse: run_grid_mse(ctx, out); break;
  case Command::eval_locations: run_eval_locations(ctx, out); break;
  case Command::sweep_w: run_sweep_w(ctx, out); break;
  case Command::fetch: break;
  }
}

int run_command(const RunConfig& config, std::ostream& log) {
  try {
    execute(config, log);
    return 0;
  } catch (const Error& e) {
    log << "error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace btcarima
