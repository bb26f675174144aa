#include "stepsched/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "stepsched/exact.hpp"
#include "stepsched/io.hpp"

namespace stepsched {

namespace {

namespace fs = std::filesystem;

std::string fixed(double value, int digits) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
    return buffer;
}

struct Task {
    std::string id;
    fs::path file;                      // empty for in-memory instances
    std::optional<Instance> instance;   // pre-generated suite member
};

std::vector<Task> resolve_tasks(const RunPlan& plan) {
    std::vector<Task> tasks;
    for (const std::string& entry : plan.instance_paths) {
        const fs::path path(entry);
        if (fs::is_directory(path)) {
            std::vector<fs::path> files;
            for (const auto& item : fs::directory_iterator(path)) {
                if (!item.is_regular_file()) continue;
                const auto ext = item.path().extension();
                if (ext == ".json" || ext == ".csv") files.push_back(item.path());
            }
            std::sort(files.begin(), files.end());
            for (const auto& file : files) tasks.push_back({file.stem().string(), file, {}});
        } else {
            tasks.push_back({path.stem().string(), path, {}});
        }
    }
    if (plan.suite) {
        const std::vector<GeneratorConfig> members = suite_plan(*plan.suite);
        fs::path dir;
        if (!plan.out_dir.empty()) {
            dir = fs::path(plan.out_dir) / "instances";
            fs::create_directories(dir);
        }
        const int reps = plan.suite->replicates;
        for (std::size_t i = 0; i < members.size(); ++i) {
            const int replicate = static_cast<int>(i % static_cast<std::size_t>(reps)) + 1;
            const std::string name = suite_instance_name(members[i], replicate);
            Task task{name, {}, generate(members[i])};
            if (!dir.empty()) {
                task.file = dir / (name + ".json");
                save_instance(*task.instance, task.file);
            }
            tasks.push_back(std::move(task));
        }
    }
    return tasks;
}

}  // namespace

RunPlan plan_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidConfig(std::string("plan JSON parse error: ") + e.what());
    }
    try {
        RunPlan plan;
        if (j.contains("instances"))
            plan.instance_paths = j.at("instances").get<std::vector<std::string>>();
        if (j.contains("suite")) {
            const auto& s = j.at("suite");
            SuiteConfig suite;
            suite.sizes = s.at("sizes").get<std::vector<int>>();
            suite.replicates = s.value("replicates", 10);
            suite.master_seed = s.value("master_seed", std::uint64_t{0});
            suite.tau = s.value("tau", 0.5);
            plan.suite = suite;
        }
        plan.algorithms = j.at("algorithms").get<std::vector<std::string>>();
        plan.exact = j.value("exact", false);
        plan.exact_max_n = j.value("exact_max_n", kBnbDefaultCap);
        plan.kappa = j.value("kappa", 0.5);
        plan.ps_mode = parse_ps_mode(j.value("ps_mode", "single-pass"));
        plan.threads = j.value("threads", 1);
        plan.out_dir = j.value("out_dir", std::string{});
        return plan;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidConfig(std::string("plan JSON: ") + e.what());
    }
}

BenchReport run_plan(const RunPlan& plan) {
    BenchReport report;
    report.with_exact = plan.exact;
    report.algorithms = plan.algorithms;

    std::vector<AlgorithmSpec> specs;
    specs.reserve(plan.algorithms.size());
    for (const std::string& label : plan.algorithms) specs.push_back(parse_algorithm(label));

    HeuristicConfig config;
    config.kappa = plan.kappa;
    config.ps_mode = plan.ps_mode;

    std::vector<Task> tasks = resolve_tasks(plan);
    std::vector<std::optional<BenchRow>> rows(tasks.size());
    std::vector<std::optional<BenchFailure>> failures(tasks.size());

    auto process = [&](std::size_t index) {
        Task& task = tasks[index];
        try {
            const Instance instance =
                task.instance ? std::move(*task.instance) : load_instance(task.file);
            BenchRow row;
            row.instance_id = task.id;
            row.n = instance.size();
            if (instance.meta()) {
                row.has_meta = true;
                row.h_class = to_string(instance.meta()->h_class);
                row.t_factor = instance.meta()->tardiness_factor;
                row.due_range = instance.meta()->due_range;
            }
            for (const AlgorithmSpec& spec : specs) {
                const auto begin = std::chrono::steady_clock::now();
                const Schedule schedule = run_algorithm(instance, spec, config);
                const auto end = std::chrono::steady_clock::now();
                row.objectives.push_back(schedule.objective);
                row.millis.push_back(std::chrono::duration<double, std::milli>(end - begin).count());
            }
            if (plan.exact) {
                const ExactResult exact = solve_bnb(instance, plan.exact_max_n);
                row.optimum = exact.optimum;
            }
            rows[index] = std::move(row);
        } catch (const std::exception& e) {
            failures[index] = BenchFailure{task.id, e.what()};
        }
    };

    const int thread_count =
        std::clamp(plan.threads, 1, static_cast<int>(std::max<std::size_t>(1, tasks.size())));
    if (thread_count <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) process(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(thread_count));
        for (int t = 0; t < thread_count; ++t) {
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= tasks.size()) break;
                    process(i);
                }
            });
        }
        for (std::thread& worker : pool) worker.join();
    }

    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (rows[i]) report.rows.push_back(std::move(*rows[i]));
        if (failures[i]) report.failures.push_back(std::move(*failures[i]));
    }

    if (!plan.out_dir.empty()) {
        fs::create_directories(plan.out_dir);
        std::ofstream out(fs::path(plan.out_dir) / "raw.csv", std::ios::binary);
        if (!out) throw IoError("cannot write raw results under '" + plan.out_dir + "'");
        write_raw_csv(report, out);
    }
    return report;
}

void write_raw_csv(const BenchReport& report, std::ostream& out) {
    out << "instance_id,n,h_class,T,R,algorithm,Z,millis";
    if (report.with_exact) out << ",z_opt";
    out << '\n';
    for (const BenchRow& row : report.rows) {
        for (std::size_t a = 0; a < report.algorithms.size(); ++a) {
            out << row.instance_id << ',' << row.n << ',';
            if (row.has_meta)
                out << row.h_class << ',' << fixed(row.t_factor, 1) << ','
                    << fixed(row.due_range, 1);
            else
                out << ",,";
            out << ',' << report.algorithms[a] << ',' << row.objectives[a] << ','
                << fixed(row.millis[a], 3);
            if (report.with_exact) {
                out << ',';
                if (row.optimum) out << *row.optimum;
            }
            out << '\n';
        }
    }
}

BenchReport read_raw_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw IoError("raw CSV: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    BenchReport report;
    if (line == "instance_id,n,h_class,T,R,algorithm,Z,millis,z_opt")
        report.with_exact = true;
    else if (line != "instance_id,n,h_class,T,R,algorithm,Z,millis")
        throw IoError("raw CSV: unexpected header '" + line + "'");

    auto split = [](const std::string& text) {
        std::vector<std::string> fields;
        std::size_t begin = 0;
        while (true) {
            const std::size_t comma = text.find(',', begin);
            if (comma == std::string::npos) {
                fields.push_back(text.substr(begin));
                break;
            }
            fields.push_back(text.substr(begin, comma - begin));
            begin = comma + 1;
        }
        return fields;
    };

    BenchRow* current = nullptr;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::vector<std::string> fields = split(line);
        const std::size_t expected = report.with_exact ? 9 : 8;
        if (fields.size() != expected)
            throw IoError("raw CSV line " + std::to_string(line_no) + ": expected " +
                          std::to_string(expected) + " fields");
        const std::string& id = fields[0];
        if (current == nullptr || current->instance_id != id) {
            BenchRow row;
            row.instance_id = id;
            row.n = std::stoi(fields[1]);
            row.h_class = fields[2];
            row.has_meta = !fields[2].empty();
            if (!fields[3].empty()) row.t_factor = std::stod(fields[3]);
            if (!fields[4].empty()) row.due_range = std::stod(fields[4]);
            report.rows.push_back(std::move(row));
            current = &report.rows.back();
        }
        if (report.rows.size() == 1) report.algorithms.push_back(fields[5]);
        const std::size_t slot = current->objectives.size();
        if (slot >= report.algorithms.size() || report.algorithms[slot] != fields[5])
            throw IoError("raw CSV line " + std::to_string(line_no) +
                          ": algorithm order differs from the first instance block");
        current->objectives.push_back(std::stoll(fields[6]));
        current->millis.push_back(std::stod(fields[7]));
        if (report.with_exact && !fields[8].empty()) {
            const Objective opt = std::stoll(fields[8]);
            if (current->optimum && *current->optimum != opt)
                throw IoError("raw CSV line " + std::to_string(line_no) +
                              ": inconsistent z_opt within an instance block");
            current->optimum = opt;
        }
    }
    for (const BenchRow& row : report.rows)
        if (row.objectives.size() != report.algorithms.size())
            throw IoError("raw CSV: instance '" + row.instance_id + "' misses algorithm rows");
    return report;
}

std::vector<ComparisonRow> comparison_rows(const BenchReport& report) {
    std::vector<ComparisonRow> rows;
    rows.reserve(report.rows.size());
    for (const BenchRow& row : report.rows)
        rows.push_back({row.instance_id, row.objectives, row.optimum});
    return rows;
}

KappaSweepResult kappa_sweep(const std::vector<Instance>& instances,
                             const std::vector<Algorithm>& algorithms,
                             const std::vector<double>& kappas) {
    if (instances.empty()) throw InvalidConfig("kappa sweep: no instances");
    if (algorithms.empty()) throw InvalidConfig("kappa sweep: no algorithms");
    for (Algorithm alg : algorithms)
        if (alg != Algorithm::ATC && alg != Algorithm::CA)
            throw InvalidConfig("kappa sweep applies to the kappa-dependent rules ATC and CA");

    KappaSweepResult result;
    for (double kappa : kappas) {
        if (!(kappa > 0.0)) throw InvalidConfig("kappa sweep: kappa must be > 0");
        HeuristicConfig config;
        config.kappa = kappa;
        for (Algorithm alg : algorithms) {
            double sum = 0.0;
            for (const Instance& instance : instances)
                sum += static_cast<double>(dispatch(instance, alg, config).objective);
            const double mean = sum / static_cast<double>(instances.size());
            result.cells.push_back({kappa, std::string(algorithm_name(alg)), mean});
        }
    }
    for (Algorithm alg : algorithms) {
        const std::string name(algorithm_name(alg));
        double best_mean = 0.0;
        double best_kappa = 0.0;
        bool first = true;
        for (const KappaSweepCell& cell : result.cells) {
            if (cell.algorithm != name) continue;
            if (first || cell.mean_objective < best_mean) {  // ties keep the smaller kappa
                first = false;
                best_mean = cell.mean_objective;
                best_kappa = cell.kappa;
            }
        }
        result.best_kappa[name] = best_kappa;
    }
    return result;
}

namespace {

// rows grouped by problem size, in ascending size order, then the whole set
std::vector<std::pair<std::string, std::vector<ComparisonRow>>> grouped_rows(
    const BenchReport& report) {
    std::map<int, std::vector<ComparisonRow>> by_n;
    for (const BenchRow& row : report.rows)
        by_n[row.n].push_back({row.instance_id, row.objectives, row.optimum});
    std::vector<std::pair<std::string, std::vector<ComparisonRow>>> groups;
    for (auto& [n, rows] : by_n) groups.emplace_back(std::to_string(n), std::move(rows));
    if (groups.size() > 1) groups.emplace_back("all", comparison_rows(report));
    return groups;
}

}  // namespace

std::string summary_csv(const BenchReport& report) {
    std::ostringstream out;
    out << "n,algorithm,mean_rivw,num_best";
    if (report.with_exact) out << ",mean_rivh,num_opt";
    out << '\n';
    for (const auto& [label, rows] : grouped_rows(report)) {
        for (const AlgorithmSummary& s : tally(rows, report.algorithms)) {
            out << label << ',' << s.algorithm << ',' << fixed(s.mean_rivw, 2) << ','
                << s.num_best;
            if (report.with_exact) {
                out << ',';
                if (s.mean_rivh) out << fixed(*s.mean_rivh, 2);
                out << ',';
                if (s.num_opt) out << *s.num_opt;
            }
            out << '\n';
        }
    }
    return out.str();
}

std::string summary_json(const BenchReport& report) {
    nlohmann::ordered_json groups = nlohmann::ordered_json::array();
    for (const auto& [label, rows] : grouped_rows(report)) {
        for (const AlgorithmSummary& s : tally(rows, report.algorithms)) {
            nlohmann::ordered_json entry;
            entry["n"] = label;
            entry["algorithm"] = s.algorithm;
            entry["mean_rivw"] = s.mean_rivw;
            entry["num_best"] = s.num_best;
            if (s.mean_rivh) entry["mean_rivh"] = *s.mean_rivh;
            if (s.num_opt) entry["num_opt"] = *s.num_opt;
            groups.push_back(std::move(entry));
        }
    }
    return groups.dump(2) + "\n";
}

std::string means_plot_csv(const BenchReport& report, const std::vector<std::string>& exclude) {
    std::vector<std::size_t> kept;
    std::vector<std::string> names;
    for (std::size_t a = 0; a < report.algorithms.size(); ++a) {
        if (std::find(exclude.begin(), exclude.end(), report.algorithms[a]) != exclude.end())
            continue;
        kept.push_back(a);
        names.push_back(report.algorithms[a]);
    }
    std::vector<std::vector<double>> samples(kept.size());
    for (const BenchRow& row : report.rows) {
        const Objective z_best = *std::min_element(row.objectives.begin(), row.objectives.end());
        const Objective z_worst = *std::max_element(row.objectives.begin(), row.objectives.end());
        for (std::size_t k = 0; k < kept.size(); ++k)
            samples[k].push_back(rivw(row.objectives[kept[k]], z_worst, z_best));
    }
    const LsdResult lsd = lsd_intervals(samples, names);
    std::ostringstream out;
    out << "algorithm,mean,lo,hi\n";
    for (const LsdInterval& interval : lsd.intervals) {
        out << interval.algorithm << ',' << fixed(interval.mean, 4) << ','
            << fixed(interval.mean - interval.half_width, 4) << ','
            << fixed(interval.mean + interval.half_width, 4) << '\n';
    }
    return out.str();
}

std::string pairs_csv(const BenchReport& report,
                      const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::ostringstream out;
    out << "n,algorithm_a,algorithm_b,num_better,num_equal\n";
    for (const auto& [label, rows] : grouped_rows(report)) {
        for (const auto& [a, b] : pairs) {
            const PairCount count = compare_pair(rows, report.algorithms, a, b);
            out << label << ',' << a << ',' << b << ',' << count.num_better << ','
                << count.num_equal << '\n';
        }
    }
    return out.str();
}

}  // namespace stepsched
