#include <algorithm>
#include <iomanip>

#include "surdlab/error.hpp"
#include "surdlab/explorer.hpp"

namespace surdlab {

LimitPointReport limit_points(const std::vector<ScanRecord>& records, std::uint64_t threshold) {
    LimitPointReport report;
    report.threshold = threshold;
    report.n_max = records.size();
    if (!records.empty()) report.d = records.front().d;
    for (const ScanRecord& rec : records) {
        ++report.counts[rec.D];
    }
    for (const auto& [D, count] : report.counts) {
        if (count >= threshold) report.candidates.push_back(D);
    }
    return report;
}

void write_scan_csv(std::ostream& os, const std::vector<ScanRecord>& records) {
    os << "d,n,radicand,D\n";
    for (const ScanRecord& rec : records) {
        os << rec.d << ',' << rec.n << ',' << rec.radicand << ',' << rec.D << '\n';
    }
}

void write_frequency_csv(std::ostream& os, const LimitPointReport& report) {
    os << "D,count\n";
    for (const auto& [D, count] : report.counts) {
        os << D << ',' << count << '\n';
    }
}

void write_limit_report(std::ostream& os, const LimitPointReport& report) {
    os << "d = " << report.d << ", n = 1.." << report.n_max << ", " << report.counts.size()
       << " distinct periods\n";
    os << "limit-point candidates (frequency >= " << report.threshold << "): " << report.candidates.size()
       << '\n';
    std::size_t shown = 0;
    for (std::size_t D : report.candidates) {
        if (shown++ == 40) {
            os << "  ...\n";
            break;
        }
        os << "  D = " << std::setw(6) << D << "  count = " << report.counts.at(D) << '\n';
    }
    os << "note: a finite scan is evidence of membership in A_d, not a proof\n";
}

void write_spectrum_csv(std::ostream& os, const std::vector<EuclidSpectrumRow>& rows) {
    os << "n,attained,covers_k,smallest_missing\n";
    for (const EuclidSpectrumRow& row : rows) {
        os << row.n << ',';
        for (std::size_t i = 0; i < row.attained.size(); ++i) {
            if (i) os << ';';
            os << row.attained[i];
        }
        os << ',' << (row.covers_k ? 1 : 0) << ',';
        if (!row.covers_k) os << row.smallest_missing;
        os << '\n';
    }
}

std::vector<Q3Row> question3(const LimitPointReport& report, std::size_t k_max) {
    auto is_candidate = [&](std::size_t D) {
        return std::binary_search(report.candidates.begin(), report.candidates.end(), D);
    };
    std::vector<Q3Row> rows;
    for (std::size_t k = 1; k <= k_max; ++k) {
        rows.push_back({k, is_candidate(k), is_candidate(k + 1)});
    }
    return rows;
}

void write_q3_csv(std::ostream& os, const std::vector<Q3Row>& rows) {
    os << "k,k_candidate,k1_candidate,satisfied\n";
    for (const Q3Row& row : rows) {
        os << row.k << ',' << row.k_candidate << ',' << row.k1_candidate << ',' << row.satisfied() << '\n';
    }
}

nlohmann::ordered_json certificate_to_json(const ConstructionCertificate& cert) {
    nlohmann::ordered_json j;
    j["d"] = to_decimal(cert.d);
    j["c"] = to_decimal(cert.c);
    j["working_d"] = to_decimal(cert.working_d);
    j["r"] = cert.r;
    j["x_4r"] = to_decimal(cert.x_4r);
    j["y_4r"] = to_decimal(cert.y_4r);
    j["p"] = cert.p;
    j["t"] = cert.t;
    j["b"] = to_decimal(cert.b);
    j["q"] = cert.q;
    j["m"] = cert.m;
    j["L"] = cert.L;
    j["L_b_p"] = cert.L_bp;
    j["predicted_window"] = {cert.window_lo(), cert.window_hi()};
    j["log_window"] = {
        {"lo", cert.log_window.lo_approx},
        {"hi", cert.log_window.hi_approx},
        {"lo_int", cert.log_window.lo_int},
        {"hi_int", cert.log_window.hi_int},
    };
    j["measured_D"] = cert.measured_D;
    j["in_predicted_window"] = cert.in_discrete_window();
    j["in_log_window"] = cert.in_log_window();
    j["verified"] = cert.verified();
    nlohmann::ordered_json checks = nlohmann::ordered_json::object();
    for (const auto& [name, ok] : cert.checks) checks[name] = ok;
    j["checks"] = checks;
    j["n_digits"] = cert.n.get_str(10).size();
    j["n"] = to_decimal(cert.n);
    j["x_m"] = to_decimal(cert.x_m);
    j["y_m"] = to_decimal(cert.y_m);
    return j;
}

ConstructionCertificate certificate_from_json(const nlohmann::ordered_json& j) {
    auto big = [&](const char* key) {
        Nat v;
        if (v.set_str(j.at(key).get<std::string>(), 10) != 0) {
            fail(ErrorKind::Precondition, "bad-certificate", std::string("field ") + key + " is not a decimal integer");
        }
        return v;
    };
    ConstructionCertificate c;
    c.d = big("d");
    c.c = big("c");
    c.working_d = big("working_d");
    c.r = j.at("r").get<std::uint64_t>();
    c.x_4r = big("x_4r");
    c.y_4r = big("y_4r");
    c.p = j.at("p").get<std::uint64_t>();
    c.t = j.at("t").get<std::uint64_t>();
    c.b = big("b");
    c.q = j.at("q").get<std::uint64_t>();
    c.m = j.at("m").get<std::uint64_t>();
    c.L = j.at("L").get<std::size_t>();
    c.L_bp = j.at("L_b_p").get<std::size_t>();
    c.log_window = window_from_prime(Nat(c.p));
    c.measured_D = j.at("measured_D").get<std::size_t>();
    c.n = big("n");
    c.x_m = big("x_m");
    c.y_m = big("y_m");
    for (const auto& [name, ok] : j.at("checks").items()) {
        c.checks.emplace_back(name, ok.get<bool>());
    }
    return c;
}

}  // namespace surdlab
