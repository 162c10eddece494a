#include "fincat/cli/app.hpp"

#include <algorithm>
#include <filesystem>
#include <map>

#include "CLI11.hpp"
#include "fincat/cli/commands.hpp"
#include "fincat/cli/model.hpp"
#include "fincat/cli/spec.hpp"
#include "fincat/error.hpp"

namespace fincat::cli {

namespace {

struct Leaf {
  CLI::App* app;
  const CommandEntry* entry;
};

struct Parsed {
  CommandOptions options;
  std::vector<std::string> inputs;
  std::string format = "text";
  bool no_timing = false;
  std::size_t shape_bound = default_shape_bound;
};

void add_options(CLI::App* leaf, Parsed& p) {
  leaf->add_option("inputs", p.inputs, "Spec files (scenario names are also accepted by 'universe scenario')");
  leaf->add_option("--of", p.options.of, "Declaration to operate on");
  leaf->add_option("--along", p.options.along, "Functor to extend along");
  leaf->add_option("--left", p.options.left, "Left operand");
  leaf->add_option("--right", p.options.right, "Right operand");
  leaf->add_option("--with", p.options.with, "Second declaration");
  leaf->add_option("--kind", p.options.kind, "Construction kind");
  leaf->add_option("--at", p.options.at, "Object name");
  leaf->add_option("--bound", p.options.bound, "Largest test-set size (default 3)")->envname("FINCAT_BOUND");
  leaf->add_option("--shape-bound", p.shape_bound, "Largest set size for functor-category checks (default 2)");
  leaf->add_option("--max-objects", p.options.max_objects, "Object limit for --scan (default 3)");
  leaf->add_option("--max-morphisms", p.options.max_morphisms, "Morphism limit for --scan (default 8)");
  leaf->add_flag("--scan", p.options.scan, "Scan all small categories");
  leaf->add_flag("--tables", p.options.tables, "Include element and map tables");
  leaf->add_option("--format", p.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
  leaf->add_flag("--no-timing", p.no_timing, "Omit timings");
}

int input_error(std::ostream& out, std::ostream& err, Format format, const InputError& e) {
  (format == Format::Structured ? out : err) << emit_error(e, format);
  return 2;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations on finite categories", "fincat"};
  app.require_subcommand(1);
  Parsed p;
  std::vector<Leaf> leaves;
  std::map<std::string, CLI::App*> groups;
  for (const auto& e : dispatch_table()) {
    CLI::App* leaf = nullptr;
    if (e.name.empty()) {
      leaf = app.add_subcommand(e.group, e.summary);
    } else {
      CLI::App*& group = groups[e.group];
      if (!group) {
        group = app.add_subcommand(e.group, e.group + " subcommands");
        group->require_subcommand(1);
      }
      leaf = group->add_subcommand(e.name, e.summary);
    }
    add_options(leaf, p);
    leaves.push_back({leaf, &e});
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const Format format = p.format == "structured" ? Format::Structured : Format::Text;
  auto selected = std::find_if(leaves.begin(), leaves.end(), [](const Leaf& l) { return l.app->parsed(); });
  const CommandEntry& entry = *selected->entry;
  if (selected->app->count("--shape-bound") > 0) p.options.shape_bound = p.shape_bound;

  std::vector<std::string> files;
  for (const auto& input : p.inputs) {
    if (entry.group == "universe" && !std::filesystem::is_regular_file(input)) {
      p.options.names.push_back(input);
    } else {
      files.push_back(input);
    }
  }
  if (entry.group == "validate" && files.empty()) {
    return input_error(out, err, format, {"InvalidInput", "", 0, 0, "validate needs at least one file"});
  }

  SpecFile spec;
  std::string current;
  try {
    for (const auto& file : files) {
      current = file;
      if (!std::filesystem::is_regular_file(file)) {
        return input_error(out, err, format, {"IOError", file, 0, 0, "cannot open '" + file + "'"});
      }
      auto part = parse_spec_file(file);
      spec.decls.insert(spec.decls.end(), part.decls.begin(), part.decls.end());
    }
    current = files.size() == 1 ? files[0] : "";
    const Model model = build_model(spec);
    const Report report = run_command(entry.group, entry.name, model, p.options);
    out << emit_report(report, format, !p.no_timing);
    return report.pass() ? 0 : 1;
  } catch (const SpecError& e) {
    return input_error(out, err, format,
                       {std::string(to_string(e.kind())), current, e.pos().line, e.pos().column, e.message()});
  } catch (const Error& e) {
    const std::string code(to_string(e.code()));
    std::string message = e.what();
    if (message.rfind(code + ": ", 0) == 0) message.erase(0, code.size() + 2);
    return input_error(out, err, format, {code, current, 0, 0, message});
  } catch (const std::exception& e) {
    return input_error(out, err, format, {"InternalError", current, 0, 0, e.what()});
  }
}

}  // namespace fincat::cli
