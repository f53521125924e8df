#pragma once

// Command-line front end. run() is the whole program minus process setup so
// that tests can drive it with captured streams.
//
// Exit codes: 0 success / all identities pass, 1 an identity mismatch,
// 2 usage or input error.

#include "billiard/chains.hpp"
#include "billiard/identities.hpp"
#include "billiard/partitions.hpp"
#include "billiard/serialize.hpp"

#include <CLI11.hpp>

#include <future>
#include <ostream>
#include <string>
#include <vector>

namespace billiard::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

inline constexpr Degree kDefaultOrder = 20;

namespace detail {

inline const std::map<std::string, PartitionClass>& class_flags() {
    static const std::map<std::string, PartitionClass> m{{"oo", PartitionClass::OOx},
                                                         {"ooE", PartitionClass::OOxE},
                                                         {"ee", PartitionClass::EEx},
                                                         {"eeO", PartitionClass::EExO}};
    return m;
}

inline void print_enumeration(PartitionClass c, long max_size, const std::string& format, std::ostream& out) {
    const auto parts = enumerate(c, max_size);
    if (format == "json") {
        json arr = json::array();
        for (const auto& p : parts) arr.push_back(partition_record(p));
        out << json{{"class", std::string(class_name(c))}, {"max_size", max_size}, {"partitions", arr}}.dump(2)
            << '\n';
        return;
    }
    out << "parts\tsize\tlength\todd_parts\tsmallest\tlargest\tphi\n";
    for (const auto& p : parts) {
        out << p.to_string() << '\t' << p.size() << '\t' << p.length() << '\t' << p.odd_count() << '\t'
            << p.smallest() << '\t' << p.largest() << '\t';
        if (satisfies(p, PartitionClass::OOxE))
            out << phi_weight(p);
        else
            out << '-';
        out << '\n';
    }
}

inline void print_recurrence(Recurrence r, long n_max, Degree order, const std::string& format, std::ostream& out) {
    const auto coeffs = recurrence_coeffs(r, n_max, order);
    if (format == "json") {
        json rows = json::array();
        for (std::size_t n = 0; n < coeffs.size(); ++n)
            rows.push_back(json{{"n", n}, {"terms", series_to_json(coeffs[n])["terms"]}});
        out << json{{"which", std::string(recurrence_name(r))}, {"order", order}, {"rows", rows}}.dump(2) << '\n';
        return;
    }
    out << "# order\t" << order << "\n";
    out << "n\tq_exp\tcoefficient\n";
    for (std::size_t n = 0; n < coeffs.size(); ++n)
        for (const auto& [e, c] : coeffs[n].terms()) out << n << '\t' << e << '\t' << c.str() << '\n';
}

inline std::vector<IdentityReport> verify_all(Degree order, unsigned jobs) {
    const auto& ids = identity_ids();
    std::vector<IdentityReport> reports;
    reports.reserve(ids.size());
    if (jobs <= 1) {
        for (const auto& id : ids) reports.push_back(verify(id, order));
        return reports;
    }
    for (std::size_t start = 0; start < ids.size(); start += jobs) {
        std::vector<std::future<IdentityReport>> batch;
        for (std::size_t i = start; i < std::min(ids.size(), start + jobs); ++i)
            batch.push_back(std::async(std::launch::async, [&, i] { return verify(ids[i], order); }));
        for (auto& f : batch) reports.push_back(f.get());
    }
    return reports;
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Enumerate, tabulate and verify generating functions of adjacency-parity partitions", "billiard"};
    app.require_subcommand(1);

    std::string cls, format = "tsv", weight = "length", variant = "general", partition_text, chain_text, identity,
                 which;
    long max_size = 0, n_max = 0;
    Degree order = kDefaultOrder;
    bool with_terms = false;
    unsigned jobs = 1;
    const auto class_names = std::vector<std::string>{"oo", "ooE", "ee", "eeO"};

    auto* en = app.add_subcommand("enumerate", "List partitions of a class with their statistics");
    en->add_option("--class", cls, "Partition class")->required()->check(CLI::IsMember(class_names));
    en->add_option("--max-size", max_size, "Largest partition size")->required()->check(CLI::NonNegativeNumber);
    en->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv"}));

    auto* gf = app.add_subcommand("gf", "Brute-force bivariate generating function");
    gf->add_option("--class", cls, "Partition class")->required()->check(CLI::IsMember(class_names));
    gf->add_option("--order", order, "Truncation order in q")->check(CLI::NonNegativeNumber);
    gf->add_option("--weight", weight, "Exponent of x")->check(CLI::IsMember({"length", "phi"}));
    gf->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv"}));

    auto* enc = app.add_subcommand("encode", "Partition to chain");
    enc->add_option("--partition", partition_text, "Ascending comma-separated parts")->required();
    enc->add_option("--variant", variant, "general (oo) or even (ooE)")->check(CLI::IsMember({"general", "even"}));

    auto* dec = app.add_subcommand("decode", "Chain to partition");
    dec->add_option("--chain", chain_text, "e.g. \"P5 P3 P2 P4 P5 | P1\"")->required();

    auto* ver = app.add_subcommand("verify", "Check one identity at a truncation order");
    ver->add_option("--identity", identity, "Identity id")->required()->check(CLI::IsMember(identity_ids()));
    ver->add_option("--order", order, "Truncation order in q")->check(CLI::NonNegativeNumber);
    ver->add_flag("--terms", with_terms, "Include both sides' terms in the report");

    auto* all = app.add_subcommand("verify-all", "Check every identity");
    all->add_option("--order", order, "Truncation order in q")->check(CLI::NonNegativeNumber);
    all->add_option("--jobs", jobs, "Identities checked concurrently")->check(CLI::PositiveNumber);
    all->add_flag("--terms", with_terms, "Include both sides' terms in each report");

    auto* rec = app.add_subcommand("recurrence", "Tabulate coefficient series f_n, g_n, s_n or t_n");
    rec->add_option("--which", which, "Sequence")->required()->check(CLI::IsMember({"f", "g", "s", "t"}));
    rec->add_option("--n-max", n_max, "Largest index n")->required()->check(CLI::NonNegativeNumber);
    rec->add_option("--order", order, "Truncation order in q")->check(CLI::NonNegativeNumber);
    rec->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv"}));

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("billiard");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        err << app.help();
        return kExitUsage;
    }

    try {
        if (*en) {
            detail::print_enumeration(detail::class_flags().at(cls), max_size, format, out);
            return kExitPass;
        }
        if (*gf) {
            const auto c = detail::class_flags().at(cls);
            const XQSeries s = brute_gf(c, order, weight == "phi" ? Weight::Phi : Weight::Length);
            if (format == "tsv")
                out << series_to_tsv(s);
            else
                out << series_to_json(s).dump(2) << '\n';
            return kExitPass;
        }
        if (*enc) {
            const Partition p = Partition::parse(partition_text);
            out << (variant == "even" ? encode_even(p) : encode_general(p)).to_string() << '\n';
            return kExitPass;
        }
        if (*dec) {
            out << decode(Chain::parse(chain_text)).to_string() << '\n';
            return kExitPass;
        }
        if (*ver) {
            const IdentityReport r = verify(identity, order);
            out << report_to_json(r, with_terms).dump(2) << '\n';
            return r.pass ? kExitPass : kExitMismatch;
        }
        if (*all) {
            const auto reports = detail::verify_all(order, jobs);
            bool pass = true;
            json arr = json::array();
            for (const auto& r : reports) {
                pass = pass && r.pass;
                arr.push_back(report_to_json(r, with_terms));
            }
            out << json{{"order", order}, {"pass", pass}, {"reports", arr}}.dump(2) << '\n';
            return pass ? kExitPass : kExitMismatch;
        }
        if (*rec) {
            detail::print_recurrence(parse_recurrence(which), n_max, order, format, out);
            return kExitPass;
        }
    } catch (const domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    err << app.help();
    return kExitUsage;
}

} // namespace billiard::cli
