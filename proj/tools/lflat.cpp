// `lflat` command-line front end. Subcommands:
//   check | test | accept | trace | words | convert | grade | repl
// Global options: --budget N (LFLAT_BUDGET), --verbosity LEVEL (LFLAT_VERBOSITY).

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lflat/lflat.hpp"

namespace {

lflat::Verbosity parse_verbosity(const std::string& text) {
    if (text == "silent") return lflat::Verbosity::silent;
    if (text == "minimal") return lflat::Verbosity::minimal;
    if (text == "detailed") return lflat::Verbosity::detailed;
    throw CLI::ValidationError("--verbosity", "must be silent, minimal or detailed");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"L-FLAT: formal languages and automata toolkit"};
    app.require_subcommand(1);

    std::size_t budget = 100000;
    std::string verbosity = "detailed";
    if (const char* env = std::getenv("LFLAT_BUDGET")) budget = std::stoul(env);
    if (const char* env = std::getenv("LFLAT_VERBOSITY")) verbosity = env;
    app.add_option("--budget", budget, "search budget (configurations)");
    app.add_option("--verbosity", verbosity, "silent | minimal | detailed");

    std::vector<std::string> files;
    std::string language, mechanism, word, regex_name, kind, name, submission;
    std::optional<std::size_t> max_len, count;
    bool opt_minimize = false, opt_rename = false;
    std::string convert_to = "dfa";

    CLI::App* check = app.add_subcommand("check", "run diagnostics on all definitions");
    check->add_option("files", files, "definition files")->required();

    CLI::App* test = app.add_subcommand("test", "run a language's unit tests");
    test->add_option("files", files)->required();
    test->add_option("--language", language)->required();
    test->add_option("--mechanism", mechanism)->required();

    CLI::App* accept = app.add_subcommand("accept", "decide one word");
    accept->add_option("files", files)->required();
    accept->add_option("--mechanism", mechanism)->required();
    accept->add_option("--word", word)->required();

    CLI::App* trace = app.add_subcommand("trace", "trace one word");
    trace->add_option("files", files)->required();
    trace->add_option("--mechanism", mechanism)->required();
    trace->add_option("--word", word)->required();

    CLI::App* words = app.add_subcommand("words", "generate accepted words");
    words->add_option("files", files)->required();
    words->add_option("--mechanism", mechanism)->required();
    words->add_option("--max-len", max_len);
    words->add_option("--count", count);

    CLI::App* convert = app.add_subcommand("convert", "regex -> automaton pipeline");
    convert->add_option("files", files)->required();
    convert->add_option("--re", regex_name)->required();
    convert->add_option("--to", convert_to)->check(CLI::IsMember({"dfa"}));
    convert->add_flag("--minimize", opt_minimize);
    convert->add_flag("--rename", opt_rename);

    CLI::App* grade = app.add_subcommand("grade", "grade a submission against a language");
    grade->add_option("--language", language)->required();
    grade->add_option("--kind", kind)->required();
    grade->add_option("--name", name)->required();
    grade->add_option("--submission", submission)->required();

    CLI::App* repl = app.add_subcommand("repl", "interactive loop");
    repl->add_option("files", files);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, std::cout, std::cerr);
        return code == 0 ? 0 : lflat::kExitUsage;
    }

    lflat::Session session;
    session.budget.max_configurations = budget;
    try {
        session.verbosity = parse_verbosity(verbosity);
    } catch (const CLI::Error&) {
        std::cerr << "error: invalid verbosity '" << verbosity << "'\n";
        return lflat::kExitUsage;
    }

    if (grade->parsed())
        return lflat::cmd_grade(language, kind, name, submission, std::cout, std::cerr);

    if (!lflat::load_files(session, files, std::cerr)) return lflat::kExitUsage;

    if (check->parsed()) return lflat::cmd_check(session, std::cout);
    if (test->parsed())
        return lflat::cmd_test(session, language, mechanism, std::cout, std::cerr);
    if (accept->parsed())
        return lflat::cmd_accept(session, mechanism, word, std::cout, std::cerr);
    if (trace->parsed())
        return lflat::cmd_trace(session, mechanism, word, std::cout, std::cerr);
    if (words->parsed())
        return lflat::cmd_words(session, mechanism, max_len, count, std::cout, std::cerr);
    if (convert->parsed())
        return lflat::cmd_convert(session, regex_name, opt_minimize, opt_rename, std::cout,
                                  std::cerr);
    if (repl->parsed()) return lflat::repl(session, std::cin, std::cout, std::cerr);
    return lflat::kExitUsage;
}
