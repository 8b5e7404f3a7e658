#include "btcarima/commands.hpp"
#include "btcarima/errors.hpp"
#include "btcarima/fetch.hpp"
#include "btcarima/model_grid.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace {

btcarima::Date parse_date_or_throw(const std::string& text) {
  const auto date = btcarima::parse_iso_date(text);
  if (!date) {
    throw CLI::ValidationError("--start", "expected YYYY-MM-DD, got '" + text + "'");
  }
  return *date;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"ARIMA bitcoin price forecasting: preprocessing, grid search and backtests"};
  app.require_subcommand(1);
  app.fallthrough();

  btcarima::RunConfig config;
  std::string data = "data/btc_usd_daily.csv";
  std::string start = "2015-09-01";
  std::string fill = "forward-fill";
  std::string region = "full";
  std::string pq_rule = "on";
  std::string formats = "csv,json";
  std::string out = "out";
  std::vector<int> pdq;

  auto* data_opt = app.add_option("--data", data, "Price CSV (date,close)")->capture_default_str();
  app.add_option("--start", start, "First day of the analysed span")->capture_default_str();
  app.add_option("--days", config.dataset.span_days, "Length of the span in days")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--fill", fill, "Missing-day policy")
      ->capture_default_str()
      ->check(CLI::IsMember({"error", "forward-fill"}));
  app.add_option("--seed", config.seed, "Master random seed")->capture_default_str();
  app.add_option("--w", config.w, "Window length(s); comma separated for sweep-w")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--locations", config.locations, "Sampled window locations")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--reps", config.reps, "Forecast repetitions per location")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--region", region, "Where windows are sampled")
      ->capture_default_str()
      ->check(CLI::IsMember({"full", "first-half"}));
  app.add_option("--pq-rule", pq_rule, "Skip orders with p < q")
      ->capture_default_str()
      ->check(CLI::IsMember({"on", "off"}));
  app.add_option("--pdq", pdq, "eval-locations: use this ARIMA(p,d,q) instead of the grid winner")
      ->delimiter(',')
      ->expected(3);
  app.add_option("--adf-max-lag", config.adf_max_lag, "Largest ADF lag considered")
      ->capture_default_str();
  app.add_option("--acf-lags", config.acf_lags, "Lags in the ACF/PACF tables")
      ->capture_default_str();
  app.add_option("--max-iter", config.fit.max_iterations,
                 "Simplex iteration cap per start (0 = 500 x parameters)")
      ->capture_default_str();
  app.add_option("--tol", config.fit.tolerance, "Relative objective tolerance")
      ->capture_default_str();
  app.add_option("--threads", config.threads, "Worker threads (0 = all cores)")
      ->capture_default_str();
  app.add_option("--out", out, "Output directory")->capture_default_str();
  app.add_option("--format", formats, "Any of csv,json,svg")->capture_default_str();
  app.add_option("--fetch-url", config.fetch_url,
                 std::string("Price endpoint for fetch (default: $") + btcarima::kFetchUrlEnv +
                     ")");

  for (const auto command :
       {btcarima::Command::preprocess, btcarima::Command::grid_rss, btcarima::Command::grid_mse,
        btcarima::Command::eval_locations, btcarima::Command::sweep_w, btcarima::Command::fetch}) {
    static constexpr const char* kHelp[] = {
        "ADF, ACF and PACF of raw, log and log-differenced prices",
        "Fit the (p,q,d) grid and rank by residual sum of squares",
        "Fit the grid and rank by backtest MSE over sampled windows",
        "Backtest MSE at every window location",
        "RSS and MSE winners for several window lengths",
        "Download date,close rows from a price endpoint"};
    const std::string name(btcarima::command_name(command));
    app.add_subcommand(name, kHelp[static_cast<int>(command)])->callback([&config, command] {
      config.command = command;
    });
  }

  try {
    app.parse(argc, argv);
    // Never let a download silently replace the default dataset.
    if (config.command == btcarima::Command::fetch && data_opt->count() == 0) {
      throw btcarima::InvalidConfig("fetch needs an explicit --data <path> for the downloaded CSV");
    }
    config.dataset.path = data;
    config.dataset.start_date = parse_date_or_throw(start);
    config.dataset.fill_policy =
        fill == "error" ? btcarima::FillPolicy::error : btcarima::FillPolicy::forward_fill;
    config.region = region == "full" ? btcarima::Region::full_span : btcarima::Region::first_half;
    config.pq_rule = pq_rule == "on";
    config.output_dir = out;
    config.formats = btcarima::parse_formats(formats);
    if (!pdq.empty()) {
      const btcarima::ArimaOrder order{pdq[0], pdq[1], pdq[2]};
      if (!order.in_grid()) {
        throw CLI::ValidationError("--pdq", "order outside p,q in 0..9, d in 0..2");
      }
      config.order = order;
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const btcarima::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return btcarima::run_command(config, std::cerr);
}
