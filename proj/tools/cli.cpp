#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "svg.hpp"
#include "trimap/angles.hpp"
#include "trimap/error.hpp"
#include "trimap/text_io.hpp"

namespace trimap::cli {

namespace {

/// Thrown while turning command-line text into values; maps to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when the output file cannot be written; maps to exit code 3.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <typename F>
auto parse_input(F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const Error& e) {
        throw InputError(e.what());
    }
}

std::string join(const std::vector<std::string>& parts)
{
    std::string s;
    for (const auto& p : parts) {
        if (!s.empty())
            s += ' ';
        s += p;
    }
    return s;
}

/// A matrix argument is "pedal", "identity", a path to a file holding matrix
/// text, or the matrix text itself.
Mat3Q load_matrix(const std::string& text)
{
    if (text == "pedal")
        return pedal_matrix();
    if (text == "identity")
        return Mat3Q::identity();
    std::error_code ec;
    if (text.find_first_of(" ,{") == std::string::npos && std::filesystem::is_regular_file(text, ec)) {
        std::ifstream in(text);
        if (!in)
            throw InputError("cannot read " + text);
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_input([&] { return parse_matrix(buf.str()); });
    }
    return parse_input([&] { return parse_matrix(text); });
}

CanonicalShape load_shape(const std::string& text)
{
    return parse_input([&] { return canonicalize(parse_shape(text)); });
}

std::complex<double> parse_point(const std::string& text)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw InputError("vertex needs the form x,y: '" + text + "'");
    try {
        std::size_t used_x = 0, used_y = 0;
        const std::string xs = text.substr(0, comma), ys = text.substr(comma + 1);
        const double x = std::stod(xs, &used_x), y = std::stod(ys, &used_y);
        if (used_x != xs.size() || used_y != ys.size())
            throw std::invalid_argument(text);
        return {x, y};
    } catch (const std::logic_error&) {
        throw InputError("vertex needs the form x,y: '" + text + "'");
    }
}

std::string fixed(double v, int digits = 6)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

/// Either the classified ATM or the exit code already reported.
struct Classified {
    std::optional<Atm> atm;
    int code = kSuccess;
};

Classified classify_or_report(const Mat3Q& m, std::uint64_t seed, std::ostream& out)
{
    const Classification c = classify(m, ClassifyOptions{.seed = seed});
    if (const auto* f = std::get_if<ClassificationFailure>(&c)) {
        out << to_string(f->reason);
        if (!f->detail.empty())
            out << ": " << f->detail;
        out << '\n';
        return {std::nullopt, kDomainFailure};
    }
    return {std::get<Atm>(c), kSuccess};
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os)
        throw IoError("cannot open " + path + " for writing");
    os << content;
    os.close();
    if (!os)
        throw IoError("failed writing " + path);
}

struct Options {
    std::uint64_t seed = 0;
    std::int64_t denominator_bound = 1000;

    std::string shape;
    std::vector<std::string> vertices;
    std::vector<std::string> matrix;
    std::string matrix_single;
    std::vector<std::string> shapes;
    std::size_t max_steps = 100000;
    std::size_t length = 20;
    std::size_t stats_length = 50;
    std::size_t points = 2000;
    unsigned workers = 0;
    std::string format = "text";
    std::string mode = "image";
    std::string out_path;
    std::string start;
};

int cmd_canon(const Options& o, std::ostream& out)
{
    const CanonicalShape p = load_shape(o.shape);
    out << p.str() << " pointgroup=" << point_group_order(p) << '\n';
    return kSuccess;
}

int cmd_shape(const Options& o, std::ostream& out)
{
    if (o.vertices.size() != 3)
        throw InputError("shape needs exactly three vertices");
    if (o.denominator_bound < 1)
        throw InputError("--denominator-bound must be positive");
    const auto z1 = parse_point(o.vertices[0]), z2 = parse_point(o.vertices[1]), z3 = parse_point(o.vertices[2]);
    const VertexAngles va = parse_input([&] { return shape_from_vertices(z1, z2, z3, o.denominator_bound); });
    out << "angles=" << fixed(va.angles[0]) << ',' << fixed(va.angles[1]) << ',' << fixed(va.angles[2]) << '\n';
    out << "snapped=" << va.snapped.str() << " flat=" << (va.flat ? "true" : "false") << '\n';
    const CanonicalShape p = canonicalize(va.snapped);
    out << "canonical=" << p.str() << " pointgroup=" << point_group_order(p) << '\n';
    return kSuccess;
}

int cmd_classify(const Options& o, std::ostream& out)
{
    const Mat3Q m = load_matrix(join(o.matrix));
    const auto c = classify_or_report(m, o.seed, out);
    if (!c.atm)
        return c.code;
    const Atm& a = *c.atm;
    out << kind_str(a.kind) << " |det|=" << a.abs_det << " expansion="
        << (a.expansion ? a.expansion->str() : std::string("none")) << '\n';
    out << "witness=" << a.witness.word_str() << '\n';
    return kSuccess;
}

int cmd_orbit(const Options& o, std::ostream& out)
{
    const Mat3Q m = load_matrix(o.matrix_single);
    const CanonicalShape p = load_shape(o.shape);
    const auto c = classify_or_report(m, o.seed, out);
    if (!c.atm)
        return c.code;
    out << format_orbit(orbit(*c.atm, p, o.max_steps));
    return kSuccess;
}

int cmd_partition(const Options& o, std::ostream& out)
{
    if (o.format != "text" && o.format != "json")
        throw InputError("--format must be text or json");
    const Mat3Q m = load_matrix(join(o.matrix));
    const auto c = classify_or_report(m, o.seed, out);
    if (!c.atm)
        return c.code;
    const MarkovPartition mp = build_partition(*c.atm);
    out << (o.format == "json" ? partition_to_json(mp) : format_partition(mp));
    return kSuccess;
}

int cmd_itinerary(const Options& o, std::ostream& out)
{
    const Mat3Q m = load_matrix(o.matrix_single);
    std::vector<CanonicalShape> starts;
    for (const auto& s : o.shapes)
        starts.push_back(load_shape(s));
    const auto c = classify_or_report(m, o.seed, out);
    if (!c.atm)
        return c.code;
    const MarkovPartition mp = build_partition(*c.atm);
    for (const auto& p : starts)
        out << format_itinerary(itinerary(mp, p, o.length), mp.size()) << '\n';
    return kSuccess;
}

int cmd_decompose(const Options& o, std::ostream& out)
{
    const Mat3Q m = load_matrix(join(o.matrix));
    const auto c = classify_or_report(m, o.seed, out);
    if (!c.atm)
        return c.code;
    out << format_decomposition(decompose(*c.atm));
    return kSuccess;
}

int cmd_stats(const Options& o, std::ostream& out)
{
    const Mat3Q m = load_matrix(join(o.matrix));
    const auto c = classify_or_report(m, o.seed, out);
    if (!c.atm)
        return c.code;
    const MarkovPartition mp = build_partition(*c.atm);
    const SymbolStatistics s = symbol_statistics(mp, o.points, o.stats_length, o.seed, o.workers);
    out << "symbols=" << s.symbols << " points=" << s.points << " kept=" << s.kept << " length=" << s.length
        << '\n';
    for (std::size_t i = 0; i < s.symbols; ++i)
        out << "symbol " << i << " count=" << s.single_counts[i] << " freq=" << fixed(s.single_freq[i]) << '\n';
    for (std::size_t i = 0; i < s.symbols; ++i)
        for (std::size_t j = 0; j < s.symbols; ++j) {
            const std::size_t k = i * s.symbols + j;
            out << "pair " << i << j << " count=" << s.pair_counts[k] << " freq=" << fixed(s.pair_freq[k]) << '\n';
        }
    out << "max_single_sigma=" << fixed(s.max_single_deviation, 3)
        << " max_pair_sigma=" << fixed(s.max_pair_deviation, 3) << '\n';
    return kSuccess;
}

int cmd_render(const Options& o, std::ostream& out)
{
    if (o.mode != "image" && o.mode != "partition" && o.mode != "orbit")
        throw InputError("--mode must be image, partition or orbit");
    if (o.out_path.empty())
        throw InputError("--out is required");
    const Mat3Q m = load_matrix(join(o.matrix));
    std::optional<CanonicalShape> start;
    if (!o.start.empty())
        start = load_shape(o.start);
    const auto c = classify_or_report(m, o.seed, out);
    if (!c.atm)
        return c.code;

    std::string doc;
    if (o.mode == "image") {
        doc = svg::render_image(*c.atm);
    } else if (o.mode == "partition") {
        doc = svg::render_partition(build_partition(*c.atm));
    } else {
        std::optional<MarkovPartition> mp;
        try {
            mp = build_partition(*c.atm);
        } catch (const Error&) {
            // The orbit is still drawn, just without the cells behind it.
        }
        if (!start) {
            std::mt19937_64 rng(o.seed);
            start = random_shape_with_denominator(rng, 97);
        }
        std::vector<CanonicalShape> path{*start};
        for (std::size_t i = 0; i < o.length; ++i)
            path.push_back(step(*c.atm, path.back()));
        doc = svg::render_orbit(mp ? &*mp : nullptr, path);
    }
    write_file(o.out_path, doc);
    out << "wrote " << o.out_path << '\n';
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact triangle shape dynamics: moduli, angle transition matrices, Markov partitions"};
    app.name("trimap");
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    app.add_option("--seed", o.seed, "Seed for randomized checks and sampling")->capture_default_str();

    const auto matrix_help = "Matrix: nine entries, a JSON document, a file path, 'pedal' or 'identity'";
    std::function<int(const Options&, std::ostream&)> handler;
    auto sub = [&](const char* name, const char* help, int (*fn)(const Options&, std::ostream&)) {
        CLI::App* s = app.add_subcommand(name, help);
        s->callback([&handler, fn] { handler = fn; });
        return s;
    };

    auto* canon = sub("canon", "Canonical representative of a shape and its point-group order", cmd_canon);
    canon->add_option("shape", o.shape, "Shape a/b,c/d,e/f")->required();

    auto* shape = sub("shape", "Angles of a triangle given by three vertices x,y", cmd_shape);
    shape->add_option("vertices", o.vertices, "Three vertices x,y")->required()->expected(3);
    shape->add_option("--denominator-bound", o.denominator_bound, "Largest denominator when snapping angles")
        ->capture_default_str();

    auto* cls = sub("classify", "Classify an angle transition matrix", cmd_classify);
    cls->add_option("matrix", o.matrix, matrix_help)->required();

    auto* orb = sub("orbit", "Iterate a shape until it cycles", cmd_orbit);
    orb->add_option("matrix", o.matrix_single, matrix_help)->required();
    orb->add_option("shape", o.shape, "Start shape a/b,c/d,e/f")->required();
    orb->add_option("--max-steps", o.max_steps, "Give up after this many steps")->capture_default_str();

    auto* part = sub("partition", "Markov partition of the fundamental domain", cmd_partition);
    part->add_option("matrix", o.matrix, matrix_help)->required();
    part->add_option("--format", o.format, "text or json")->capture_default_str();

    auto* iti = sub("itinerary", "Symbolic itineraries, one start shape per line", cmd_itinerary);
    iti->add_option("matrix", o.matrix_single, matrix_help)->required();
    iti->add_option("shapes", o.shapes, "Start shapes a/b,c/d,e/f")->required();
    iti->add_option("--length", o.length, "Symbols per itinerary")->capture_default_str();

    auto* dec = sub("decompose", "Hofstadter factors of a Type I matrix", cmd_decompose);
    dec->add_option("matrix", o.matrix, matrix_help)->required();

    auto* st = sub("stats", "Symbol and pair frequencies of random itineraries", cmd_stats);
    st->add_option("matrix", o.matrix, matrix_help)->required();
    st->add_option("--points", o.points, "Number of random starts")->capture_default_str();
    st->add_option("--length", o.stats_length, "Itinerary length")->capture_default_str();
    st->add_option("--workers", o.workers, "Worker threads (0: hardware concurrency)")->capture_default_str();

    auto* ren = sub("render", "Write an SVG figure", cmd_render);
    ren->add_option("matrix", o.matrix, matrix_help)->required();
    ren->add_option("--out", o.out_path, "Output SVG path")->required();
    ren->add_option("--mode", o.mode, "image, partition or orbit")->capture_default_str();
    ren->add_option("--start", o.start, "Orbit start shape (orbit mode; random from --seed otherwise)");
    ren->add_option("--length", o.length, "Orbit steps to draw (orbit mode)")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    try {
        return handler(o, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kDomainFailure;
    }
}

}  // namespace trimap::cli
