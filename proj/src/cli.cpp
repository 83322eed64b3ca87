#include "bars/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "bars/certify.hpp"
#include "bars/dissector.hpp"
#include "bars/goodness.hpp"
#include "bars/instance.hpp"
#include "bars/packer.hpp"
#include "bars/svg.hpp"

namespace bars {

namespace {

Instance load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot read '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_instance(text.str());
}

void save(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out)
        throw std::invalid_argument("cannot write '" + path + "'");
    out << text;
}

const BoxSpec& need_box(const Instance& inst, const std::string& name)
{
    const BoxSpec* b = inst.find_box(name);
    if (!b)
        throw std::invalid_argument("no box named '" + name + "'");
    return *b;
}

const Subgroup& need_group(const Instance& inst, const std::string& name)
{
    const Subgroup* g = inst.find_group(name);
    if (!g)
        throw std::invalid_argument("no group named '" + name + "'");
    return *g;
}

const Tiling& need_tiling(const Instance& inst)
{
    if (!inst.tiling)
        throw std::invalid_argument("the file has no tiling");
    return *inst.tiling;
}

std::vector<std::uint64_t> parse_dims(const std::string& text)
{
    std::vector<std::uint64_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(c); }))
            throw std::invalid_argument("expected positive integers separated by commas, got '" + text + "'");
        out.push_back(std::stoull(item));
    }
    if (out.empty())
        throw std::invalid_argument("empty dimension list");
    return out;
}

std::string join(const std::vector<std::size_t>& axes)
{
    std::string s;
    for (auto a : axes)
        s += (s.empty() ? "" : " ") + std::to_string(a + 1);
    return s.empty() ? "none" : s;
}

std::string tuple(const std::vector<std::uint64_t>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + std::to_string(v[i]);
    return s + ")";
}

struct Options {
    std::string file, box, group, output;
    std::size_t k = 1;
    std::size_t min_dirs = 1;
    bool dehn = false;
    std::vector<std::string> t3, t4, bricks, scale, pack_bricks;
    std::string dims;
    bool fixed = false;
    std::uint64_t node_limit = 10'000'000;
};

int cmd_rank(const Options& o, std::ostream& out)
{
    Instance inst = load(o.file);
    out << rank_over_Q(need_box(inst, o.box).sides()) << "\n";
    return kExitOk;
}

int cmd_dissect(const Options& o, std::ostream& out)
{
    Instance inst = load(o.file);
    const BoxSpec& box = need_box(inst, o.box);
    try {
        KBarDissection kd = dissect_into_k_bars(box, o.k);
        inst.tiling = Tiling{o.box, kd.dissection};
        std::ostringstream text;
        text << "# basis:";
        for (const auto& e : kd.basis.basis)
            text << " " << e.to_string() << ";";
        text << " " << kd.dissection.pieces.size() << " pieces\n" << emit_instance(inst);
        if (o.output.empty()) {
            out << text.str();
        } else {
            save(o.output, text.str());
            out << "wrote " << kd.dissection.pieces.size() << " pieces to " << o.output << "\n";
        }
        return kExitOk;
    } catch (const NotDissectable& e) {
        out << certificate_text(e.certificate);
        return kExitImpossible;
    }
}

int cmd_verify(const Options& o, std::ostream& out)
{
    Instance inst = load(o.file);
    const Tiling& t = need_tiling(inst);
    TilingVerdict v = verify_tiling(t.dissection);
    if (v.valid()) {
        out << "valid: " << t.dissection.pieces.size() << " pieces tile " << t.box << " (" << v.cells
            << " grid cells)\n";
        return kExitOk;
    }
    out << "invalid: " << v.violation->describe() << "\n";
    return kExitImpossible;
}

int report(const std::optional<Certificate>& c, const std::string& otherwise, std::ostream& out)
{
    if (!c) {
        out << otherwise << "\n";
        return kExitOk;
    }
    out << certificate_text(*c);
    return kExitImpossible;
}

int cmd_certify(const Options& o, std::ostream& out)
{
    Instance inst = load(o.file);
    if (!o.t3.empty() || !o.t4.empty()) {
        const auto& names = o.t3.empty() ? o.t4 : o.t3;
        QNum a = parse_expression(inst, names.at(0));
        QNum b = parse_expression(inst, names.at(1));
        auto c = o.t3.empty() ? theorem4_certificate(a, b) : theorem3_certificate(a, b);
        return report(c, "commensurable: no certificate", out);
    }
    if (o.box.empty())
        throw std::invalid_argument("certify needs --box, --t3 or --t4");
    const BoxSpec& box = need_box(inst, o.box);
    if (o.dehn) {
        if (box.dimension() != 2)
            throw std::invalid_argument("--dehn needs a 2D box");
        return report(dehn_rectangle_certificate(box.side(0), box.side(1)), "commensurable: no certificate", out);
    }
    return report(bar_impossibility_certificate(box, o.k), "dissectable: rank is at most k", out);
}

int cmd_good(const Options& o, std::ostream& out)
{
    Instance inst = load(o.file);
    const BoxSpec& box = need_box(inst, o.box);
    const Subgroup& g = need_group(inst, o.group);
    auto c = goodness_impossibility_certificate(PlacedBox::at_origin(box), g, o.min_dirs);
    if (!c) {
        out << "good: directions " << join(is_good_box(box, g, o.min_dirs).directions) << "\n";
        return kExitOk;
    }
    out << "bad: no dissection into good boxes exists\n" << certificate_text(*c);
    return kExitImpossible;
}

int cmd_unpackable(const Options& o, std::ostream& out)
{
    Instance inst = load(o.file);
    std::vector<BoxSpec> all{need_box(inst, o.box)};
    for (const auto& name : o.bricks)
        all.push_back(need_box(inst, name));
    if (!o.scale.empty()) {
        std::vector<Rational> factors;
        for (const auto& f : o.scale)
            factors.push_back(parse_rational(f));
        all = scale_instance(all, factors);
        out << "scaled box: " << all.front().to_string() << "\n";
    }
    std::vector<BoxSpec> bricks(all.begin() + 1, all.end());
    auto r = prove_unpackable(all.front(), bricks, need_group(inst, o.group), o.min_dirs);
    if (auto* inc = std::get_if<Inconclusive>(&r)) {
        out << "inconclusive: " << inc->reason << "\n";
        return kExitOk;
    }
    const auto& proof = std::get<UnpackabilityProof>(r);
    out << "unpackable: every orientation of every brick is good, the box is not\n";
    for (const auto& og : proof.orientations) {
        out << "orientation brick=" << o.bricks.at(og.brick) << " axes=";
        for (std::size_t i = 0; i < og.permutation.size(); ++i)
            out << (i ? "," : "") << og.permutation[i] + 1;
        out << " good directions " << join(og.directions) << "\n";
    }
    out << certificate_text(proof.box_certificate);
    return kExitImpossible;
}

int cmd_pack(const Options& o, std::ostream& out)
{
    PackProblem p;
    p.dims = parse_dims(o.dims);
    p.allow_rotations = !o.fixed;
    for (const auto& spec : o.pack_bricks) {
        BrickType t;
        auto colon = spec.find(':');
        t.dims = parse_dims(spec.substr(0, colon));
        if (colon != std::string::npos)
            t.count = parse_dims(spec.substr(colon + 1)).at(0);
        p.bricks.push_back(std::move(t));
    }
    PackResult r = pack(p, o.node_limit);
    if (auto* packing = std::get_if<Packing>(&r)) {
        out << "packing: " << packing->bricks.size() << " bricks (" << packing->nodes << " nodes)\n";
        for (const auto& b : packing->bricks)
            out << "brick " << b.type + 1 << " at " << tuple(b.offset) << " size " << tuple(b.extent) << "\n";
        return kExitOk;
    }
    if (auto* inf = std::get_if<Infeasible>(&r)) {
        if (inf->by_volume_check)
            out << "infeasible: volume check\n";
        else
            out << "infeasible: exhaustive search (" << inf->nodes << " nodes)\n";
        return kExitImpossible;
    }
    out << "limit exceeded after " << std::get<LimitExceeded>(r).nodes << " nodes\n";
    return kExitPrecision;
}

int cmd_svg(const Options& o, std::ostream& out)
{
    Instance inst = load(o.file);
    std::string svg = render_svg(need_tiling(inst).dissection);
    if (o.output.empty())
        out << svg;
    else
        save(o.output, svg);
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact k-bar dissections, impossibility certificates and brick packing", "bars"};
    app.require_subcommand(1);
    Options o;

    auto* rank = app.add_subcommand("rank", "print the rank over Q of a box's sides");
    rank->add_option("FILE", o.file)->required();
    rank->add_option("--box", o.box)->required();

    auto* dissect = app.add_subcommand("dissect", "cut a box into k-bars or print a certificate");
    dissect->add_option("FILE", o.file)->required();
    dissect->add_option("--box", o.box)->required();
    dissect->add_option("--k", o.k)->required()->check(CLI::PositiveNumber);
    dissect->add_option("-o,--output", o.output);

    auto* verify = app.add_subcommand("verify", "check the tiling in a file");
    verify->add_option("FILE", o.file)->required();

    auto* certify = app.add_subcommand("certify", "print an impossibility certificate");
    certify->add_option("FILE", o.file)->required();
    certify->add_option("--box", o.box);
    certify->add_option("--k", o.k)->check(CLI::PositiveNumber);
    certify->add_flag("--dehn", o.dehn);
    auto* t3 = certify->add_option("--t3", o.t3, "lengths a b for the a x a x b x b box")->expected(2);
    auto* t4 = certify->add_option("--t4", o.t4, "lengths a b for the a x a x a x b box")->expected(2);
    t3->excludes(t4);

    auto* good = app.add_subcommand("good", "decide goodness of a box, with certificate when bad");
    good->add_option("FILE", o.file)->required();
    good->add_option("--box", o.box)->required();
    good->add_option("--group", o.group)->required();
    good->add_option("--min-dirs", o.min_dirs)->required()->check(CLI::PositiveNumber);

    auto* unpack = app.add_subcommand("unpackable", "prove a box cannot be filled with bricks");
    unpack->add_option("FILE", o.file)->required();
    unpack->add_option("--box", o.box)->required();
    unpack->add_option("--bricks", o.bricks)->required()->delimiter(',');
    unpack->add_option("--group", o.group)->required();
    unpack->add_option("--min-dirs", o.min_dirs)->check(CLI::PositiveNumber);
    unpack->add_option("--scale", o.scale, "divide side i by factor i")->delimiter(',');

    auto* packcmd = app.add_subcommand("pack", "exhaustive integer packing search");
    packcmd->add_option("--dims", o.dims)->required();
    packcmd->add_option("--brick", o.pack_bricks, "d1,d2,...[:count]")->required();
    packcmd->add_flag("--fixed-orientation", o.fixed);
    packcmd->add_option("--node-limit", o.node_limit)->check(CLI::PositiveNumber);

    auto* svg = app.add_subcommand("svg", "render a 2D tiling");
    svg->add_option("FILE", o.file)->required();
    svg->add_option("-o,--output", o.output);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (rank->parsed())
            return cmd_rank(o, out);
        if (dissect->parsed())
            return cmd_dissect(o, out);
        if (verify->parsed())
            return cmd_verify(o, out);
        if (certify->parsed())
            return cmd_certify(o, out);
        if (good->parsed())
            return cmd_good(o, out);
        if (unpack->parsed())
            return cmd_unpackable(o, out);
        if (packcmd->parsed())
            return cmd_pack(o, out);
        if (svg->parsed())
            return cmd_svg(o, out);
    } catch (const IndeterminateSign& e) {
        err << "precision exhausted: " << e.what() << "\n";
        return kExitPrecision;
    } catch (const RefinementExhausted& e) {
        err << "precision exhausted: " << e.what() << "\n";
        return kExitPrecision;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

} // namespace bars
