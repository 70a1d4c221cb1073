#include "maxent/io.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace maxent {
namespace io {

using nlohmann::json;

MomentSequence read_moments_json(std::istream& in) {
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("moments file is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("moments")) {
        throw ValidationError("moments file must be an object with a \"moments\" key");
    }
    const auto& arr = j.at("moments");
    if (!arr.is_array() || arr.empty()) {
        throw ValidationError("\"moments\" must be a non-empty array of numbers");
    }
    std::vector<double> raw;
    raw.reserve(arr.size());
    for (const auto& v : arr) {
        if (!v.is_number()) throw ValidationError("\"moments\" entries must be numbers");
        raw.push_back(v.get<double>());
    }
    return validate_moments(std::move(raw));
}

MomentSequence read_moments_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open moments file: " + path);
    return read_moments_json(in);
}

void write_moments_json(std::ostream& out, const MomentSequence& mu) {
    json j;
    j["moments"] = mu.values();
    out << j.dump(2) << "\n";
}

FiniteDistribution read_distribution_csv(std::istream& in, double sum_tolerance) {
    std::string line;
    if (!std::getline(in, line)) throw ValidationError("empty distribution file");
    // tolerate a BOM and whitespace around the header
    if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line != "x,p") throw ValidationError("distribution CSV must start with header \"x,p\"");

    std::vector<double> probs;
    std::int64_t left = 0;
    std::int64_t expected = 0;
    bool first = true;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        std::istringstream row(line);
        std::int64_t x = 0;
        double p = 0.0;
        char comma = 0;
        if (!(row >> x >> comma >> p) || comma != ',') {
            throw ValidationError("malformed CSV row at line " + std::to_string(line_no));
        }
        if (first) {
            if (x < 0) throw ValidationError("states must be non-negative");
            left = x;
            expected = x;
            first = false;
        } else if (x != expected) {
            throw ValidationError("states must be contiguous ascending at line " +
                                  std::to_string(line_no));
        }
        if (!(p >= 0.0) || !std::isfinite(p)) {
            throw ValidationError("probability out of range at line " + std::to_string(line_no));
        }
        probs.push_back(p);
        ++expected;
    }
    if (probs.empty()) throw ValidationError("distribution file has no data rows");

    double sum = 0.0;
    for (double p : probs) sum += p;
    if (std::abs(sum - 1.0) > sum_tolerance) {
        throw ValidationError("probabilities sum to " + std::to_string(sum) +
                              ", outside tolerance of 1");
    }
    const SupportWindow window(left, left + static_cast<std::int64_t>(probs.size()) - 1);
    return FiniteDistribution::from_weights(window, std::move(probs));
}

FiniteDistribution read_distribution_csv_file(const std::string& path, double sum_tolerance) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open distribution file: " + path);
    return read_distribution_csv(in, sum_tolerance);
}

void write_distribution_csv(std::ostream& out, const FiniteDistribution& dist) {
    out << "x,p\n";
    out << std::setprecision(17);
    for (std::int64_t x = dist.window().left; x <= dist.window().right; ++x) {
        out << x << "," << dist.prob_at(x) << "\n";
    }
}

void write_distribution_json(std::ostream& out, const FiniteDistribution& dist) {
    json j;
    j["left"] = dist.window().left;
    j["right"] = dist.window().right;
    j["p"] = dist.probs();
    out << j.dump(2) << "\n";
}

}  // namespace io
}  // namespace maxent
