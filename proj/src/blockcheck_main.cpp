/**
 * @file blockcheck_main.cpp
 * @brief Command-line front end: character tables, block decompositions,
 *        single checks, the corpus survey, and combinatorial S_n commands.
 *
 * Standard output carries exactly one machine-parseable JSON document per
 * invocation; progress notes go to standard error.  Exit codes: 0 = all
 * expectations met, 1 = a check failed or the survey deviated from the
 * expectations file, 2 = usage or input errors.
 *
 * Part of blockcheck, an exact character-table and p-block verification
 * toolkit for desk-scale finite groups.
 *
 * Distributed under the MIT license; see LICENSE.
 */

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "blockcheck/blocks.hpp"
#include "blockcheck/formats.hpp"
#include "blockcheck/partitions.hpp"
#include "blockcheck/spin.hpp"
#include "blockcheck/survey.hpp"
#include "blockcheck/table.hpp"

namespace {

using namespace blockcheck;

ordered_json partition_json(const Partition &la) {
    ordered_json a = ordered_json::array();
    for (i64 part : la) a.push_back(part);
    return a;
}

/// Primes for a per-prime check: an explicit comma list, or "all" = every
/// prime dividing |G|.
std::vector<i64> select_primes(const std::string &spec, const FiniteGroup &G) {
    std::vector<i64> ps;
    if (spec == "all") {
        for (u64 p : prime_divisors(static_cast<u64>(G.order())))
            ps.push_back(static_cast<i64>(p));
        return ps;
    }
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        const std::size_t comma = std::min(spec.find(',', pos), spec.size());
        const std::string tok = spec.substr(pos, comma - pos);
        const i64 p = parse_dec(tok);
        if (p < 2 || !is_prime(static_cast<u64>(p)))
            throw Error(dec(p) + " is not a prime");
        ps.push_back(p);
        pos = comma + 1;
    }
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    return ps;
}

CharacterTable table_with_progress(const FiniteGroup &G) {
    std::cerr << "[blockcheck] computing character table of " << G.name()
              << " (order " << G.order() << ", " << G.class_count()
              << " classes)\n";
    return character_table(G);
}

int run_table(const std::string &groupfile, const std::string &out) {
    LoadedGroup lg = load_group(groupfile);
    const CharacterTable T = table_with_progress(lg.group);
    verify_orthogonality(T);
    if (out.empty())
        std::cout << table_to_json(T).dump(2) << "\n";
    else
        save_table(T, out);
    return 0;
}

ordered_json block_to_json(const CharacterTable &T, const Block &B, i64 p,
                           std::size_t index) {
    ordered_json j;
    j["index"] = static_cast<i64>(index);
    j["principal"] = B.principal;
    j["defect"] = B.defect;
    j["exponent"] = dec(B.exponent);
    j["exponent_mod_center"] = dec(B.exponent_mod_center);
    ordered_json geoff = ordered_json::array();
    for (std::size_t c : B.geoff) geoff.push_back(static_cast<i64>(c));
    j["geoff_classes"] = std::move(geoff);
    ordered_json chars = ordered_json::array();
    for (std::size_t s : B.chars) {
        ordered_json cj;
        cj["index"] = static_cast<i64>(s);
        cj["degree"] = dec(T.rows[s].degree);
        cj["defect"] = char_defect(T, s, p);
        chars.push_back(std::move(cj));
    }
    j["characters"] = std::move(chars);
    return j;
}

int run_blocks(const std::string &groupfile, const std::string &primespec) {
    LoadedGroup lg = load_group(groupfile);
    const CharacterTable T = table_with_progress(lg.group);
    ordered_json doc;
    doc["format"] = "blockcheck-blocks/v1";
    doc["group"] = lg.name;
    doc["order"] = dec(lg.group.order());
    ordered_json decomps = ordered_json::array();
    for (i64 p : select_primes(primespec, lg.group)) {
        const BlockDecomposition bd = block_partition(lg.group, T, p);
        ordered_json dj;
        dj["prime"] = p;
        dj["principal_block"] = static_cast<i64>(bd.principal_index);
        ordered_json blocks = ordered_json::array();
        for (std::size_t b = 0; b < bd.blocks.size(); ++b)
            blocks.push_back(block_to_json(T, bd.blocks[b], p, b));
        dj["blocks"] = std::move(blocks);
        decomps.push_back(std::move(dj));
    }
    doc["decompositions"] = std::move(decomps);
    std::cout << doc.dump(2) << "\n";
    return 0;
}

int finish_reports(const std::vector<CheckReport> &reports) {
    std::cout << report_document(reports).dump(2) << "\n";
    for (const CheckReport &r : reports)
        if (!r.pass()) return 1;
    return 0;
}

int run_check(const std::string &check, const std::string &groupfile,
              const std::string &primespec) {
    if (check == "a10") {
        if (!groupfile.empty())
            throw Error("check a10 is purely combinatorial and takes no group file");
        return finish_reports({verify_a10_phenomenon()});
    }
    if (groupfile.empty())
        throw Error("check " + check + " requires a group file");
    LoadedGroup lg = load_group(groupfile);
    const CharacterTable T = table_with_progress(lg.group);
    std::vector<CheckReport> reports;
    if (check == "wilde") {
        reports.push_back(check_wilde(T));
    } else if (check == "condition-star") {
        reports.push_back(check_condition_star(lg.group, T));
    } else if (check == "dagger" || check == "dagger-star" ||
               check == "brauer-nesbitt") {
        for (i64 p : select_primes(primespec, lg.group)) {
            if (check == "dagger")
                reports.push_back(check_dagger(lg.group, T, p));
            else if (check == "dagger-star")
                reports.push_back(check_dagger_star(lg.group, T, p));
            else
                reports.push_back(check_brauer_nesbitt(T, p));
        }
    } else {
        throw Error("unknown check '" + check +
                    "' (expected wilde, dagger, dagger-star, brauer-nesbitt, "
                    "condition-star, or a10)");
    }
    return finish_reports(reports);
}

int run_survey(const SurveyConfig &cfg, const std::string &out) {
    const SurveyOutcome outcome = ::blockcheck::run_survey(cfg);
    const std::string text = outcome.document.dump(2) + "\n";
    if (!out.empty()) write_text_file(out, text);
    std::cout << text;
    return outcome.ok() ? 0 : 1;
}

int run_sym(i64 n, i64 p, const std::string &sub) {
    if (n < 0) throw Error("sym: n must be non-negative");
    if (p < 2 || !is_prime(static_cast<u64>(p)))
        throw Error("sym: " + dec(p) + " is not a prime");
    if (sub == "blocks" || sub == "dagger-verify") {
        if (n > 50)
            throw BoundExceeded("sym: n is capped at 50 for " + sub);
    }
    if (sub == "blocks") {
        ordered_json doc;
        doc["format"] = "blockcheck-sym-blocks/v1";
        doc["n"] = n;
        doc["p"] = p;
        ordered_json blocks = ordered_json::array();
        for (const SnBlock &blk : sn_blocks(n, p)) {
            ordered_json bj;
            bj["core"] = partition_json(blk.core);
            bj["weight"] = blk.weight;
            ordered_json members = ordered_json::array();
            for (const Partition &la : blk.members)
                members.push_back(partition_json(la));
            bj["members"] = std::move(members);
            blocks.push_back(std::move(bj));
        }
        doc["blocks"] = std::move(blocks);
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    if (sub == "dagger-verify") {
        return finish_reports({verify_sn_dagger(n, p)});
    }
    if (sub == "mn-table") {
        if (n > 14)
            throw BoundExceeded(
                "sym: mn-table is quadratic in the number of partitions; n is "
                "capped at 14");
        ordered_json doc;
        doc["format"] = "blockcheck-sym-mn/v1";
        doc["n"] = n;
        const std::vector<Partition> all = partitions(n);
        ordered_json classes = ordered_json::array();
        for (const Partition &mu : all) classes.push_back(partition_json(mu));
        doc["classes"] = std::move(classes);
        ordered_json rows = ordered_json::array();
        for (const Partition &la : all) {
            ordered_json rj;
            rj["label"] = partition_json(la);
            rj["degree"] = dec(degree(la));
            ordered_json vals = ordered_json::array();
            for (const Partition &mu : all) vals.push_back(dec(mn_value(la, mu)));
            rj["values"] = std::move(vals);
            rows.push_back(std::move(rj));
        }
        doc["rows"] = std::move(rows);
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    if (sub == "spin-degrees") {
        ordered_json doc;
        doc["format"] = "blockcheck-sym-spin/v1";
        doc["n"] = n;
        doc["p"] = p;
        ordered_json labels = ordered_json::array();
        for (const Partition &la : strict_partitions(n)) {
            ordered_json lj;
            lj["label"] = partition_json(la);
            lj["degree"] = dec(spin_degree(la, n));
            lj["associate_pair"] = ((n - static_cast<i64>(la.size())) % 2) == 1;
            if (p % 2 == 1) {
                lj["bar_core"] = partition_json(bar_core(la, p));
                lj["bar_weight"] = bar_weight(la, p);
            }
            labels.push_back(std::move(lj));
        }
        doc["labels"] = std::move(labels);
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    throw Error("unknown sym subcommand '" + sub +
                "' (expected blocks, dagger-verify, mn-table, or spin-degrees)");
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"exact character tables and p-block checks for desk-scale "
                 "finite groups"};
    app.require_subcommand(1);

    std::string groupfile, out, primespec = "all", checkname;
    CLI::App *cmd_table = app.add_subcommand("table", "compute and save a character table");
    cmd_table->add_option("groupfile", groupfile, "group file (blockcheck-group/v1)")
        ->required();
    cmd_table->add_option("-o,--out", out, "write the table here instead of stdout");

    CLI::App *cmd_blocks =
        app.add_subcommand("blocks", "print the p-block decomposition");
    cmd_blocks->add_option("groupfile", groupfile, "group file")->required();
    cmd_blocks->add_option("-p,--prime", primespec,
                           "prime, comma list, or 'all' (primes dividing |G|)");

    CLI::App *cmd_check = app.add_subcommand(
        "check", "run one check: wilde | dagger | dagger-star | brauer-nesbitt "
                 "| condition-star | a10");
    cmd_check->add_option("name", checkname, "check name")->required();
    cmd_check->add_option("groupfile", groupfile, "group file (not used by a10)");
    cmd_check->add_option("-p,--prime", primespec,
                          "prime, comma list, or 'all' (primes dividing |G|)");

    SurveyConfig cfg;
    std::string survey_primes = "all", survey_checks;
    CLI::App *cmd_survey = app.add_subcommand(
        "survey", "run checks across a corpus and diff against expectations");
    cmd_survey->add_option("--corpus", cfg.corpus_dir,
                           "corpus directory (default: $BLOCKCHECK_CORPUS)");
    cmd_survey->add_option("--expectations", cfg.expectations_path,
                           "expectations file")->required();
    cmd_survey->add_option("--checks", survey_checks,
                           "comma list of checks (default: all)");
    cmd_survey->add_option("--primes", survey_primes,
                           "comma list of primes, or 'all' per group");
    cmd_survey->add_option("-j,--jobs", cfg.jobs, "parallel (group) tasks");
    cmd_survey->add_option("-o,--out", out, "also write the survey report here");

    i64 sym_n = 0, sym_p = 2;
    std::string sym_sub;
    CLI::App *cmd_sym = app.add_subcommand(
        "sym", "combinatorial S_n commands: blocks | dagger-verify | mn-table "
               "| spin-degrees");
    cmd_sym->add_option("n", sym_n, "symbol count of S_n")->required();
    cmd_sym->add_option("p", sym_p, "prime")->required();
    cmd_sym->add_option("subcommand", sym_sub, "what to print")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_table->parsed()) return run_table(groupfile, out);
        if (cmd_blocks->parsed()) return run_blocks(groupfile, primespec);
        if (cmd_check->parsed()) return run_check(checkname, groupfile, primespec);
        if (cmd_survey->parsed()) {
            if (cfg.corpus_dir.empty()) {
                const char *env = std::getenv("BLOCKCHECK_CORPUS");
                if (env != nullptr) cfg.corpus_dir = env;
            }
            if (cfg.corpus_dir.empty())
                throw Error("survey needs --corpus or the BLOCKCHECK_CORPUS "
                            "environment variable");
            if (!survey_checks.empty()) {
                std::size_t pos = 0;
                while (pos <= survey_checks.size()) {
                    const std::size_t comma =
                        std::min(survey_checks.find(',', pos), survey_checks.size());
                    cfg.checks.push_back(survey_checks.substr(pos, comma - pos));
                    pos = comma + 1;
                }
            }
            if (survey_primes != "all") {
                std::size_t pos = 0;
                while (pos <= survey_primes.size()) {
                    const std::size_t comma =
                        std::min(survey_primes.find(',', pos), survey_primes.size());
                    cfg.primes.push_back(parse_dec(survey_primes.substr(pos, comma - pos)));
                    pos = comma + 1;
                }
            }
            return run_survey(cfg, out);
        }
        if (cmd_sym->parsed()) return run_sym(sym_n, sym_p, sym_sub);
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
