// qecc: command-line front end for the codec toolkit. One word per line on
// the streaming commands; exit codes: 0 ok, 1 usage error, 2 data error,
// 3 internal error.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "qecc/a1.hpp"
#include "qecc/a2.hpp"
#include "qecc/analysis.hpp"
#include "qecc/channel.hpp"
#include "qecc/nwxli.hpp"
#include "qecc/prototype.hpp"
#include "qecc/wxli.hpp"

using namespace qecc;

namespace {

struct FamilyOptions {
    std::string family;
    std::uint32_t base = 3;
    unsigned r = 0;               // 0: per-family default
    std::int64_t message_len = -1;  // -1: full capacity
    bool global_check = false;
    std::string set_file;
    unsigned ncert = 4;
};

void add_family_flags(CLI::App* cmd, FamilyOptions& opts) {
    cmd->add_option("--family", opts.family, "prototype|a1|a2|a2sparse|golay|nwxli")
        ->required()
        ->check(CLI::IsMember({"prototype", "a1", "a2", "a2sparse", "golay", "nwxli"}));
    cmd->add_option("-p,--base", opts.base, "alphabet size (prototype only, prime)");
    cmd->add_option("-r", opts.r, "index length");
    cmd->add_option("-m,--msglen", opts.message_len, "message length (default: full capacity)");
    cmd->add_flag("--global-check", opts.global_check, "a2sparse: append the value-sum symbol");
    cmd->add_option("--set", opts.set_file, "nwxli: index-set file, one vector per line");
    cmd->add_option("--ncert", opts.ncert, "nwxli: independence order to certify (default 4)");
}

std::unique_ptr<Codec> make_codec(const FamilyOptions& opts) {
    const auto msglen_or = [&](std::uint64_t cap) -> std::size_t {
        if (opts.message_len < 0) return cap;
        return static_cast<std::size_t>(opts.message_len);
    };
    if (opts.family == "prototype") {
        const unsigned r = opts.r ? opts.r : 3;
        return std::make_unique<PrototypeCode>(opts.base, r);
    }
    if (opts.family == "a1") {
        if (opts.r == 0 && opts.message_len >= 0) {
            const unsigned r = A1Code::choose_r(static_cast<std::uint64_t>(opts.message_len));
            return std::make_unique<A1Code>(r, static_cast<std::size_t>(opts.message_len));
        }
        const unsigned r = opts.r ? opts.r : 3;
        return std::make_unique<A1Code>(r, msglen_or(A1Code::capacity(r)));
    }
    if (opts.family == "a2") {
        const unsigned r = opts.r ? opts.r : 4;
        return std::make_unique<A2Code>(r, msglen_or(A2Code::capacity(r)));
    }
    if (opts.family == "a2sparse") {
        const unsigned r = opts.r ? opts.r : 4;
        return std::make_unique<A2SparseCode>(r, msglen_or(A2SparseCode::capacity(r)),
                                              opts.global_check);
    }
    if (opts.family == "golay") {
        return std::make_unique<NwxliCode>(NwxliCode::golay());
    }
    if (opts.family == "nwxli") {
        if (opts.set_file.empty()) throw UsageError("nwxli requires --set FILE");
        std::ifstream in(opts.set_file);
        if (!in) throw DataError("cannot open index-set file: " + opts.set_file);
        return std::make_unique<NwxliCode>(load_index_set(in), opts.ncert);
    }
    throw UsageError("unknown family: " + opts.family);
}

struct StreamOptions {
    std::string input;   // empty or "-": stdin
    std::string output;  // empty or "-": stdout
    bool strict = false;
};

void add_stream_flags(CLI::App* cmd, StreamOptions& opts) {
    cmd->add_option("-i,--input", opts.input, "input file (default: stdin)");
    cmd->add_option("-o,--output", opts.output, "output file (default: stdout)");
    cmd->add_flag("--strict", opts.strict, "treat malformed input lines as fatal");
}

/// Applies fn to every input line; reports malformed lines with their line
/// number and either skips them or rethrows under --strict.
int for_each_line(const StreamOptions& opts,
                  const std::function<void(const std::string&, std::ostream&)>& fn) {
    std::ifstream file_in;
    if (!opts.input.empty() && opts.input != "-") {
        file_in.open(opts.input);
        if (!file_in) throw DataError("cannot open input: " + opts.input);
    }
    std::istream& in = file_in.is_open() ? file_in : std::cin;

    std::ofstream file_out;
    if (!opts.output.empty() && opts.output != "-") {
        file_out.open(opts.output);
        if (!file_out) throw DataError("cannot open output: " + opts.output);
    }
    std::ostream& out = file_out.is_open() ? file_out : std::cout;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            fn(line, out);
        } catch (const DataError& e) {
            std::cerr << "line " << line_no << ": " << e.what() << "\n";
            if (opts.strict) throw;
        } catch (const UsageError& e) {
            std::cerr << "line " << line_no << ": " << e.what() << "\n";
            if (opts.strict) throw DataError(e.what());
        }
    }
    return 0;
}

std::vector<std::uint8_t> parse_message(const std::string& line, std::uint32_t base) {
    const DigitVec v = DigitVec::parse(line, base);
    return {v.digits().begin(), v.digits().end()};
}

std::string correction_detail(const CodeSpec& spec, const std::vector<Correction>& corrections) {
    std::ostringstream os;
    for (std::size_t i = 0; i < corrections.size(); ++i) {
        if (i) os << ";";
        os << "pos=" << corrections[i].position
           << ",index=" << spec.describe_position(corrections[i].position)
           << ",delta=" << static_cast<unsigned>(corrections[i].delta);
    }
    return os.str();
}

void emit_stats(std::ostream& out, const std::string& prefix, const SweepStats& stats) {
    out << prefix << " trials=" << stats.trials << " clean=" << stats.clean
        << " corrected_ok=" << stats.corrected_ok << " miscorrected=" << stats.miscorrected
        << " detected=" << stats.detected << " silent=" << stats.silent << "\n";
}

void append_json(const std::string& path, const nlohmann::json& object) {
    if (path.empty()) return;
    std::ofstream out(path, std::ios::app);
    if (!out) throw DataError("cannot open json output: " + path);
    out << object.dump() << "\n";
}

nlohmann::json stats_json(const SweepStats& stats) {
    return {{"trials", stats.trials},     {"clean", stats.clean},
            {"corrected_ok", stats.corrected_ok}, {"miscorrected", stats.miscorrected},
            {"detected", stats.detected}, {"silent", stats.silent}};
}

int cmd_info(const FamilyOptions& family, bool verbose) {
    const auto codec = make_codec(family);
    const CodeSpec& spec = codec->spec();
    std::cout << "[" << spec.block_length() << "," << spec.message_length() << ","
              << spec.design_distance() << "]_" << spec.base() << "\n";
    std::cout << "id=" << spec.id() << "\n";

    std::size_t redundant = 0, special = 0, banished = 0;
    for (const Position& pos : spec.positions()) {
        redundant += pos.role == PositionRole::Redundant;
        special += pos.role == PositionRole::Special;
        banished += pos.role == PositionRole::Banished;
    }
    std::cout << "message=" << spec.message_length() << " redundant=" << redundant
              << " special=" << special << " banished=" << banished << "\n";
    if (verbose) {
        for (std::size_t i = 0; i < spec.block_length(); ++i) {
            std::cout << i << " " << spec.describe_position(i) << " "
                      << role_name(spec.active(i).role) << "\n";
        }
    }
    return 0;
}

int cmd_encode(const FamilyOptions& family, const StreamOptions& stream) {
    const auto codec = make_codec(family);
    return for_each_line(stream, [&](const std::string& line, std::ostream& out) {
        out << serialize(codec->encode(parse_message(line, codec->spec().base()))) << "\n";
    });
}

int cmd_decode(const FamilyOptions& family, const StreamOptions& stream) {
    const auto codec = make_codec(family);
    return for_each_line(stream, [&](const std::string& line, std::ostream& out) {
        const DecodeResult result = codec->decode(parse_word(codec->spec_ptr(), line));
        out << status_name(result.outcome.status) << " " << serialize(result.word);
        if (result.outcome.corrections.empty()) {
            out << " -";
        } else {
            out << " " << correction_detail(codec->spec(), result.outcome.corrections);
        }
        out << "\n";
    });
}

int cmd_mindist(const FamilyOptions& family, unsigned max_weight, const std::string& json_path) {
    const auto codec = make_codec(family);
    const CodeSpec& spec = codec->spec();
    const CheckMatrix matrix = check_matrix_of(spec);
    const unsigned w_max = std::min(max_weight, spec.design_distance());
    const auto deps = min_distance_column_search(matrix, w_max);

    unsigned lower = w_max + 1;  // distance is at least this unless a dependency shows
    std::optional<unsigned> exact;
    for (unsigned w = 1; w <= w_max; ++w) {
        if (!deps[w - 1]) {
            std::cout << "weight " << w << ": no column dependency\n";
            continue;
        }
        std::cout << "weight " << w << ": dependency";
        for (auto [col, coeff] : deps[w - 1]->entries) {
            std::cout << " " << static_cast<unsigned>(coeff) << "*col" << col << "("
                      << spec.describe_position(col) << ")";
        }
        std::cout << "\n";
        lower = w;
        exact = w;
        break;
    }

    std::optional<unsigned> enumerated;
    try {
        enumerated = min_weight_enumeration(*codec);
        std::cout << "enumeration minimum weight: " << *enumerated << "\n";
    } catch (const UsageError&) {
        std::cout << "enumeration skipped: message space over budget\n";
    }

    if (enumerated && exact && *enumerated != *exact) {
        throw InternalError("distance oracles disagree");
    }
    if (enumerated) exact = enumerated;

    if (exact) {
        std::cout << "minimum distance = " << *exact << "\n";
    } else {
        std::cout << "minimum distance >= " << lower << "\n";
    }
    nlohmann::json j{{"spec", spec.id()},
                     {"column_search_max", w_max},
                     {"distance_lower_bound", lower}};
    if (exact) j["distance"] = *exact;
    append_json(json_path, j);
    return 0;
}

int cmd_sweep(const FamilyOptions& family, unsigned weight, unsigned codewords,
              std::uint64_t samples, std::uint64_t seed, const std::string& json_path) {
    const auto codec = make_codec(family);
    SplitMix64 rng(seed);
    SweepStats stats;
    const std::vector<std::uint8_t> zero(codec->spec().message_length(), 0);
    std::vector<Codeword> words;
    words.push_back(codec->encode(zero));
    for (unsigned i = 0; i < codewords; ++i) words.push_back(random_codeword(*codec, rng));
    for (const Codeword& word : words) {
        if (samples == 0) {
            stats += exhaustive_error_sweep(*codec, word, weight);
        } else {
            stats += sampled_error_sweep(*codec, word, weight, samples, rng);
        }
    }
    std::ostringstream prefix;
    prefix << "spec=" << codec->spec().id() << " weight=" << weight
           << " mode=" << (samples == 0 ? "exhaustive" : "sampled")
           << " codewords=" << words.size();
    emit_stats(std::cout, prefix.str(), stats);

    const nlohmann::json j{{"spec", codec->spec().id()},
                           {"weight", weight},
                           {"mode", samples == 0 ? "exhaustive" : "sampled"},
                           {"codewords", words.size()},
                           {"counts", stats_json(stats)}};
    std::cout << j.dump() << "\n";
    append_json(json_path, j);
    return 0;
}

int cmd_simulate(const FamilyOptions& family, const ChannelConfig& config,
                 const std::string& json_path) {
    const auto codec = make_codec(family);
    const ChannelReport report = simulate(*codec, config);
    std::ostringstream prefix;
    prefix << "spec=" << codec->spec().id() << " seed=" << config.seed
           << " workers=" << config.workers;
    if (config.forced_weight) {
        prefix << " forced_weight=" << *config.forced_weight;
    } else {
        prefix << " epsilon=" << config.epsilon;
    }
    emit_stats(std::cout, prefix.str(), report.stats);
    std::cout << "rates corrected_ok=" << report.rate(report.stats.corrected_ok)
              << " miscorrected=" << report.rate(report.stats.miscorrected)
              << " detected=" << report.rate(report.stats.detected)
              << " silent=" << report.rate(report.stats.silent) << "\n";

    nlohmann::json j{{"spec", codec->spec().id()},
                     {"seed", config.seed},
                     {"trials", config.trials},
                     {"workers", config.workers},
                     {"counts", stats_json(report.stats)}};
    if (config.forced_weight) {
        j["forced_weight"] = *config.forced_weight;
    } else {
        j["epsilon"] = config.epsilon;
    }
    std::cout << j.dump() << "\n";
    append_json(json_path, j);
    return 0;
}

int cmd_wxli(unsigned r, unsigned certify, const std::string& set_file) {
    if (!set_file.empty()) {
        if (certify == 0) certify = 3;
        std::ifstream in(set_file);
        if (!in) throw DataError("cannot open index-set file: " + set_file);
        std::vector<DigitVec> set;
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) set.push_back(DigitVec::parse(line, 3));
        }
        const IndependenceReport report = certify_kwise_independent(set, certify);
        if (report.independent) {
            std::cout << "set of " << set.size() << " indices is " << certify
                      << "-wise independent\n";
            return 0;
        }
        std::cout << "set is NOT " << certify << "-wise independent; witness:";
        for (const auto& [v, coeff] : report.witness->terms) {
            std::cout << " " << static_cast<unsigned>(coeff) << "*" << v.str();
        }
        std::cout << " = 0\n";
        return 0;
    }

    const WxliFamily family = build_family(r);
    std::cout << "r=" << r << " band=" << family.band << " f=" << family.f() << "\n";
    std::cout << "I1:";
    for (const DigitVec& v : family.i1) std::cout << " " << v.str();
    std::cout << "\nI2:";
    for (const DigitVec& v : family.i2) std::cout << " " << v.str();
    std::cout << "\nR:";
    for (const DigitVec& v : family.redundant) std::cout << " " << v.str();
    std::cout << "\n";
    if (certify > 0) {
        const IndependenceReport report = certify_kwise_independent(family.i1, certify);
        std::cout << "I1 " << certify << "-wise independent: "
                  << (report.independent ? "yes" : "NO") << "\n";
    }
    return 0;
}

int cmd_table() {
    std::cout << "r f(r) block message rate\n";
    for (unsigned r = 3; r <= 9; ++r) {
        const std::uint64_t f = family_size(r);
        const std::uint64_t block = 2 * f + 2;
        const std::uint64_t msg = 2 * f - r;
        char rate[16];
        std::snprintf(rate, sizeof rate, "%.3f",
                      static_cast<double>(msg) / static_cast<double>(block));
        std::cout << "r=" << r << " f=" << f << " block=" << block << " msg=" << msg
                  << " rate=" << rate << "\n";
    }
    std::cout << "\nfamily [n,k,d]_q general_form class\n";
    std::cout << "prototype [9,6,3]_3 [p^r,p^r-r-1,3]_p SEC-DED\n";
    std::cout << "a1 [13,10,3]_3 [(3^r-1)/2,(3^r-1)/2-r,3]_3 SEC-DED\n";
    std::cout << "a2 [22,16,4]_3 [2f(r)+2,2f(r)-r,4]_3 SEC-TED\n";
    std::cout << "a2sparse [10,6,4]_3 [f(r),f(r)-r,4]_3 SEC-TED\n";
    std::cout << "golay [11,6,5]_3 - DEC\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"digit-indexed q-ary error-correcting code toolkit"};
    app.require_subcommand(1);

    FamilyOptions family;
    StreamOptions stream;
    bool verbose = false;

    CLI::App* info = app.add_subcommand("info", "print code parameters and roles");
    add_family_flags(info, family);
    info->add_flag("-v,--verbose", verbose, "list every position");

    CLI::App* encode = app.add_subcommand("encode", "encode message lines into codewords");
    add_family_flags(encode, family);
    add_stream_flags(encode, stream);

    CLI::App* decode = app.add_subcommand("decode", "decode received lines");
    add_family_flags(decode, family);
    add_stream_flags(decode, stream);

    unsigned max_weight = 4;
    std::string json_path;
    CLI::App* mindist = app.add_subcommand("mindist", "certify the minimum distance");
    add_family_flags(mindist, family);
    mindist->add_option("--max-weight", max_weight, "column-search weight cap (default 4)");
    mindist->add_option("--json", json_path, "append a JSON record to this file");

    unsigned weight = 1;
    unsigned codewords = 10;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    CLI::App* sweep = app.add_subcommand("sweep", "classify injected errors of one weight");
    add_family_flags(sweep, family);
    sweep->add_option("-w,--weight", weight, "error weight")->required();
    sweep->add_option("--codewords", codewords, "random codewords besides the zero word");
    sweep->add_option("--samples", samples, "patterns per codeword (0: exhaustive)");
    sweep->add_option("--seed", seed, "random seed");
    sweep->add_option("--json", json_path, "append a JSON record to this file");

    ChannelConfig channel;
    unsigned forced_weight = 0;
    CLI::App* simulate_cmd = app.add_subcommand("simulate", "seeded symmetric-channel run");
    add_family_flags(simulate_cmd, family);
    simulate_cmd->add_option("--trials", channel.trials, "number of trials")->required();
    simulate_cmd->add_option("--epsilon", channel.epsilon, "symbol error probability");
    simulate_cmd->add_option("--forced-weight", forced_weight,
                             "inject exactly this many errors per trial");
    simulate_cmd->add_option("--seed", channel.seed, "random seed");
    simulate_cmd->add_option("--workers", channel.workers, "worker threads");
    simulate_cmd->add_option("--json", json_path, "append a JSON record to this file");

    unsigned wxli_r = 4;
    unsigned certify = 0;
    std::string wxli_set;
    CLI::App* wxli = app.add_subcommand("wxli", "print or certify index families");
    wxli->add_option("-r", wxli_r, "index length (default 4)");
    wxli->add_option("--certify", certify, "independence order to certify");
    wxli->add_option("--set", wxli_set, "certify this index-set file instead");

    CLI::App* table = app.add_subcommand("table", "print the family parameter tables");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (info->parsed()) return cmd_info(family, verbose);
        if (encode->parsed()) return cmd_encode(family, stream);
        if (decode->parsed()) return cmd_decode(family, stream);
        if (mindist->parsed()) return cmd_mindist(family, max_weight, json_path);
        if (sweep->parsed()) return cmd_sweep(family, weight, codewords, samples, seed, json_path);
        if (simulate_cmd->parsed()) {
            if (forced_weight > 0) channel.forced_weight = forced_weight;
            return cmd_simulate(family, channel, json_path);
        }
        if (wxli->parsed()) return cmd_wxli(wxli_r, certify, wxli_set);
        if (table->parsed()) return cmd_table();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
