/**
 * @file survey.hpp
 * @brief Corpus survey: runs the selected checks over every group file in
 *        a corpus directory and diffs the outcomes against an expectations
 *        file.
 *
 * The survey is deterministic: group files are processed in sorted
 * filename order, primes ascending, checks in the order requested, and the
 * report merge is by task index, so the output is byte-identical for any
 * parallelism degree.
 *
 * Part of blockcheck, an exact character-table and p-block verification
 * toolkit for desk-scale finite groups.
 *
 * Distributed under the MIT license; see LICENSE.
 */

#ifndef BLOCKCHECK_SURVEY_HPP
#define BLOCKCHECK_SURVEY_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "blockcheck/blocks.hpp"
#include "blockcheck/formats.hpp"
#include "blockcheck/table.hpp"

namespace blockcheck {

struct SurveyConfig {
    std::string corpus_dir;
    std::string expectations_path;
    std::vector<std::string> checks; ///< empty = all survey checks
    std::vector<i64> primes;         ///< empty = all primes dividing |G|
    int jobs = 1;
};

struct SurveyOutcome {
    ordered_json document;
    std::vector<std::string> deviations;
    bool ok() const { return deviations.empty(); }
};

/// The checks the survey knows how to run.  `wilde` and `condition-star`
/// are prime-independent; the rest run once per selected prime.
inline const std::vector<std::string> &survey_check_names() {
    static const std::vector<std::string> names{
        "wilde", "dagger", "dagger-star", "brauer-nesbitt", "condition-star"};
    return names;
}

namespace detail {

struct GroupSurvey {
    std::string name;
    std::vector<CheckReport> reports;
};

inline GroupSurvey survey_one(const std::string &path,
                              const std::vector<std::string> &checks,
                              const std::vector<i64> &primes) {
    LoadedGroup lg = load_group(path);
    const CharacterTable T = character_table(lg.group);
    verify_orthogonality(T);
    std::vector<i64> ps = primes;
    if (ps.empty())
        for (u64 p : prime_divisors(static_cast<u64>(lg.group.order())))
            ps.push_back(static_cast<i64>(p));
    std::sort(ps.begin(), ps.end());
    GroupSurvey out{lg.name, {}};
    for (const std::string &check : checks) {
        if (check == "wilde") {
            out.reports.push_back(check_wilde(T));
        } else if (check == "condition-star") {
            out.reports.push_back(check_condition_star(lg.group, T));
        } else {
            for (i64 p : ps) {
                if (check == "dagger")
                    out.reports.push_back(check_dagger(lg.group, T, p));
                else if (check == "dagger-star")
                    out.reports.push_back(check_dagger_star(lg.group, T, p));
                else if (check == "brauer-nesbitt")
                    out.reports.push_back(check_brauer_nesbitt(T, p));
            }
        }
    }
    return out;
}

} // namespace detail

/// Runs the survey.  Throws on configuration problems (unknown check,
/// unreadable corpus, expectations not covering the corpus); check
/// failures and expectation mismatches are reported in the outcome, not
/// thrown.
inline SurveyOutcome run_survey(const SurveyConfig &cfg) {
    std::vector<std::string> checks =
        cfg.checks.empty() ? survey_check_names() : cfg.checks;
    for (const std::string &c : checks)
        if (std::find(survey_check_names().begin(), survey_check_names().end(), c) ==
            survey_check_names().end())
            throw Error("survey: unknown check '" + c + "'");
    for (i64 p : cfg.primes)
        if (p < 2 || !is_prime(static_cast<u64>(p)))
            throw Error("survey: " + dec(p) + " is not a prime");

    namespace fs = std::filesystem;
    std::vector<std::string> files;
    {
        std::error_code ec;
        fs::directory_iterator it(cfg.corpus_dir, ec);
        if (ec)
            throw ParseError("survey: cannot read corpus directory '" +
                             cfg.corpus_dir + "'");
        for (const fs::directory_entry &entry : it)
            if (entry.is_regular_file() && entry.path().extension() == ".json")
                files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());
    if (files.empty())
        throw ParseError("survey: corpus directory '" + cfg.corpus_dir +
                         "' contains no group files");

    const Expectations expected = load_expectations(cfg.expectations_path);

    std::vector<std::optional<detail::GroupSurvey>> results(files.size());
    std::vector<std::exception_ptr> errors(files.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= files.size()) return;
            try {
                results[i] = detail::survey_one(files[i], checks, cfg.primes);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const int jobs = std::max(1, cfg.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (std::thread &t : pool) t.join();
    }
    for (const std::exception_ptr &e : errors)
        if (e) std::rethrow_exception(e);

    // The expectations file must name exactly the corpus groups.
    std::vector<std::string> names;
    for (const auto &r : results) names.push_back(r->name);
    std::vector<std::string> sorted_names = names;
    std::sort(sorted_names.begin(), sorted_names.end());
    if (std::adjacent_find(sorted_names.begin(), sorted_names.end()) !=
        sorted_names.end())
        throw MetadataMismatch("survey: duplicate group name in corpus");
    if (sorted_names != expected.groups) {
        for (const std::string &n : sorted_names)
            if (!std::binary_search(expected.groups.begin(), expected.groups.end(), n))
                throw MetadataMismatch("survey: corpus group '" + n +
                                       "' missing from expectations");
        for (const std::string &n : expected.groups)
            if (!std::binary_search(sorted_names.begin(), sorted_names.end(), n))
                throw MetadataMismatch("survey: expectations name unknown group '" +
                                       n + "'");
    }

    SurveyOutcome out;
    ordered_json result_rows = ordered_json::array();
    ordered_json all_reports = ordered_json::array();
    for (const auto &group_result : results) {
        for (const CheckReport &r : group_result->reports) {
            const ExpectationEntry *e = expected.find(r.group, r.check, r.prime);
            const std::string want = e ? e->status : expected.default_status;
            const std::string got = r.status();
            std::string cell = r.group + " " + r.check +
                               (r.prime > 0 ? " p=" + dec(r.prime) : "");
            bool match = (got == want);
            if (!match)
                out.deviations.push_back(cell + ": expected " + want + ", got " + got);
            if (match && e && e->has_witness && got == "FAIL") {
                bool found = false;
                for (const Violation &v : r.violations)
                    if (v.block_defect == e->witness_block_defect &&
                        v.exponent == e->witness_exponent)
                        found = true;
                if (!found) {
                    match = false;
                    out.deviations.push_back(
                        cell + ": witness (block_defect " + dec(e->witness_block_defect) +
                        ", exponent " + dec(e->witness_exponent) +
                        ") not found among violations");
                }
            }
            ordered_json row;
            row["group"] = r.group;
            row["check"] = r.check;
            row["prime"] = r.prime;
            row["status"] = got;
            row["expected"] = want;
            row["match"] = match;
            result_rows.push_back(std::move(row));
            all_reports.push_back(report_to_json(r));
        }
    }
    ordered_json doc;
    doc["format"] = kSurveyFormat;
    ordered_json corpus = ordered_json::array();
    for (const std::string &n : names) corpus.push_back(n);
    doc["corpus"] = std::move(corpus);
    ordered_json checks_json = ordered_json::array();
    for (const std::string &c : checks) checks_json.push_back(c);
    doc["checks"] = std::move(checks_json);
    doc["results"] = std::move(result_rows);
    ordered_json dev = ordered_json::array();
    for (const std::string &d : out.deviations) dev.push_back(d);
    doc["deviations"] = std::move(dev);
    doc["reports"] = std::move(all_reports);
    out.document = std::move(doc);
    return out;
}

} // namespace blockcheck

#endif // BLOCKCHECK_SURVEY_HPP
