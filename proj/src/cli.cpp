#include "tvb/cli.hpp"

#include <fstream>

#include <CLI11.hpp>

#include "tvb/io.hpp"
#include "tvb/svg.hpp"

namespace tvb {

namespace {

IntVec parse_character(const std::string& text, int d) {
    IntVec u;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) {
        try {
            size_t used = 0;
            u.push_back(std::stoll(cur, &used));
            while (used < cur.size() && std::isspace(static_cast<unsigned char>(cur[used]))) used++;
            if (used != cur.size()) throw std::invalid_argument(cur);
        } catch (const std::exception&) {
            throw ValidationError("bad character coordinate '" + cur + "'");
        }
    }
    if (static_cast<int>(u.size()) != d) {
        throw ValidationError("character needs exactly " + std::to_string(d) + " coordinates");
    }
    return u;
}

void deliver(const std::string& payload, const std::string& output_path, std::ostream& out) {
    if (output_path.empty()) {
        out << payload;
        return;
    }
    std::ofstream f(output_path, std::ios::binary);
    if (!f) throw ValidationError("cannot open output file: " + output_path);
    f << payload;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Equivariant vector bundles on smooth complete toric varieties: parliaments, "
                 "positivity, and cohomology"};
    app.name("tvb");
    app.require_subcommand(1);

    std::string input, output, format = "json";
    std::string svg_path, character_text;
    std::vector<long long> jet_orders;
    bool want_euler = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", input, "bundle description file (JSON)")->required();
        sub->add_option("--output", output, "write the report here instead of stdout");
        sub->add_option("--format", format, "json or text")
            ->check(CLI::IsMember({"json", "text"}));
    };
    CLI::App* c_validate = app.add_subcommand("validate", "check fan, structure, and compatibility");
    CLI::App* c_report = app.add_subcommand("report", "everything at once");
    CLI::App* c_parliament = app.add_subcommand("parliament", "polytopes and cone characters");
    CLI::App* c_sections = app.add_subcommand("sections", "global sections by weight");
    CLI::App* c_positivity = app.add_subcommand("positivity", "generation, jets, ampleness");
    CLI::App* c_restrict = app.add_subcommand("restrict", "splitting on every wall curve");
    CLI::App* c_cohomology = app.add_subcommand("cohomology", "cohomology at a character or all of it");
    for (CLI::App* sub : {c_validate, c_report, c_parliament, c_sections, c_positivity, c_restrict,
                          c_cohomology}) {
        add_common(sub);
    }
    c_parliament->add_option("--svg", svg_path, "also draw the parliament (two-dimensional fans)");
    c_positivity->add_option("--jets", jet_orders, "extra jet orders to test");
    c_cohomology->add_option("--character", character_text, "character as comma-separated integers");
    c_cohomology->add_flag("--euler", want_euler, "Euler characteristic over all characters");

    try {
        std::vector<const char*> argv;
        argv.push_back("tvb");
        for (const std::string& s : args) argv.push_back(s.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        const BundleFile bf = load_bundle_file(input);
        Report rep;
        int exit_code = 0;
        if (c_validate->parsed()) {
            rep = validation_report(bf, &exit_code);
        } else if (c_cohomology->parsed()) {
            if (want_euler == !character_text.empty()) {
                throw ValidationError("cohomology needs exactly one of --character or --euler");
            }
            require_valid(bf.bundle.fan);
            validate_bundle_structure(bf.bundle);
            if (want_euler) {
                rep = euler_report(bf);
            } else {
                rep = cohomology_character_report(
                    bf, parse_character(character_text, bf.bundle.fan.lattice_rank));
            }
        } else {
            const BundleAnalysis a = analyze(bf.bundle);
            if (c_report->parsed()) {
                rep = full_report(bf, a);
            } else if (c_parliament->parsed()) {
                rep = parliament_report(bf, a);
                if (!svg_path.empty()) {
                    deliver(render_svg(a, bf.name.value_or("parliament")), svg_path, out);
                }
            } else if (c_sections->parsed()) {
                rep = sections_report(bf, a);
            } else if (c_positivity->parsed()) {
                rep = positivity_command_report(bf, a, jet_orders);
            } else if (c_restrict->parsed()) {
                rep = restrict_report(bf, a);
            }
        }
        deliver(format == "text" ? rep.to_text() : rep.to_json(), output, out);
        return exit_code;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const IncompatibleFiltrations& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace tvb
