#include "stepsched/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace stepsched {

namespace {

using ordered_json = nlohmann::ordered_json;

GenerationMeta meta_from_json(const ordered_json& j) {
    GenerationMeta meta;
    meta.h_class = parse_h_class(j.at("h_class").get<std::string>());
    meta.tardiness_factor = j.at("t_factor").get<double>();
    meta.due_range = j.at("r").get<double>();
    meta.tau = j.at("tau").get<double>();
    meta.seed = j.at("seed").get<std::uint64_t>();
    meta.cmax_prime = j.at("cmax_prime").get<Time>();
    return meta;
}

}  // namespace

std::string instance_to_json(const Instance& instance) {
    ordered_json j;
    j["n"] = instance.size();
    ordered_json jobs = ordered_json::array();
    for (const Job& job : instance.jobs()) {
        ordered_json row;
        row["id"] = job.id;
        row["a"] = job.basic_time;
        row["b"] = job.penalty;
        row["d"] = job.due;
        row["h"] = job.deteriorating_date;
        row["w"] = job.weight;
        jobs.push_back(std::move(row));
    }
    j["jobs"] = std::move(jobs);
    if (instance.meta()) {
        const GenerationMeta& meta = *instance.meta();
        ordered_json m;
        m["h_class"] = to_string(meta.h_class);
        m["t_factor"] = meta.tardiness_factor;
        m["r"] = meta.due_range;
        m["tau"] = meta.tau;
        m["seed"] = meta.seed;
        m["cmax_prime"] = meta.cmax_prime;
        j["meta"] = std::move(m);
    }
    return j.dump(2) + "\n";
}

Instance instance_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInstance(std::string("instance JSON parse error: ") + e.what());
    }
    try {
        std::vector<Job> jobs;
        for (const auto& row : j.at("jobs")) {
            Job job;
            job.id = row.at("id").get<int>();
            job.basic_time = row.at("a").get<Time>();
            job.penalty = row.at("b").get<Time>();
            job.due = row.at("d").get<Time>();
            job.deteriorating_date = row.at("h").get<Time>();
            job.weight = row.at("w").get<Weight>();
            jobs.push_back(job);
        }
        if (j.contains("n") && j.at("n").get<std::size_t>() != jobs.size())
            throw InvalidInstance("instance JSON: field n disagrees with the job count");
        std::optional<GenerationMeta> meta;
        if (j.contains("meta") && !j.at("meta").is_null()) meta = meta_from_json(j.at("meta"));
        return Instance(std::move(jobs), std::move(meta));
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInstance(std::string("instance JSON: ") + e.what());
    }
}

std::string instance_to_csv(const Instance& instance) {
    std::ostringstream out;
    out << "id,a,b,d,h,w\n";
    for (const Job& job : instance.jobs()) {
        out << job.id << ',' << job.basic_time << ',' << job.penalty << ',' << job.due << ','
            << job.deteriorating_date << ',' << job.weight << '\n';
    }
    return out.str();
}

Instance instance_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw InvalidInstance("instance CSV: empty input");
    // tolerate a trailing \r from CRLF files
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "id,a,b,d,h,w")
        throw InvalidInstance("instance CSV: expected header 'id,a,b,d,h,w', got '" + line + "'");
    std::vector<Job> jobs;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream fields(line);
        Job job;
        char sep = ',';
        if (!(fields >> job.id >> sep >> job.basic_time >> sep >> job.penalty >> sep >> job.due >>
              sep >> job.deteriorating_date >> sep >> job.weight))
            throw InvalidInstance("instance CSV: malformed row '" + line + "'");
        jobs.push_back(job);
    }
    return Instance(std::move(jobs));
}

void save_instance(const Instance& instance, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << (path.extension() == ".csv" ? instance_to_csv(instance) : instance_to_json(instance));
    if (!out) throw IoError("write to '" + path.string() + "' failed");
}

Instance load_instance(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    if (path.extension() == ".csv") return instance_from_csv(text);
    if (path.extension() == ".json") return instance_from_json(text);
    // no known extension: sniff for JSON, fall back to CSV
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return instance_from_json(text);
    return instance_from_csv(text);
}

}  // namespace stepsched
