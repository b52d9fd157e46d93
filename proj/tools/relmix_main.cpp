// Command-line front end. Everything goes through the public C API in
// relmix.h; exit codes are 0 (success), 2 (input error), 3 (search cap),
// 4 (oracle mismatch), 5 (property violation).

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relmix.h"

namespace {

int exit_code(relmix_status status) {
  switch (status) {
    case RELMIX_OK:
      return 0;
    case RELMIX_ERR_SEARCH_TOO_LARGE:
      return 3;
    case RELMIX_ERR_ORACLE_MISMATCH:
      return 4;
    case RELMIX_ERR_PROPERTY_VIOLATION:
      return 5;
    case RELMIX_ERR_INPUT:
    case RELMIX_ERR_NULL_ARGUMENT:
    case RELMIX_ERR_INTERNAL:
      break;
  }
  return 2;
}

int fail(relmix_status status) {
  std::cerr << "error: " << relmix_last_error() << "\n";
  return exit_code(status);
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  out = buffer.str();
  return true;
}

struct OwnedString {
  char* value = nullptr;
  ~OwnedString() { relmix_string_free(value); }
};

struct PolyHandle {
  relmix_poly* value = nullptr;
  ~PolyHandle() { relmix_poly_free(value); }
};

struct TupleHandle {
  relmix_tuple* value = nullptr;
  ~TupleHandle() { relmix_tuple_free(value); }
};

int cmd_vol(const std::string& file) {
  std::string text;
  if (!read_file(file, text)) {
    std::cerr << "error: cannot read " << file << "\n";
    return 2;
  }
  PolyHandle poly;
  relmix_status status = relmix_poly_parse(text.c_str(), &poly.value);
  if (status != RELMIX_OK) return fail(status);
  OwnedString volume;
  status = relmix_poly_complement_volume(poly.value, &volume.value);
  if (status != RELMIX_OK) return fail(status);
  std::cout << volume.value << "\n";
  return 0;
}

int cmd_mv(const std::string& file, const std::string& method) {
  std::string text;
  if (!read_file(file, text)) {
    std::cerr << "error: cannot read " << file << "\n";
    return 2;
  }
  TupleHandle tuple;
  relmix_status status = relmix_tuple_parse(text.c_str(), &tuple.value);
  if (status != RELMIX_OK) return fail(status);
  relmix_method m = RELMIX_METHOD_BOTH;
  if (method == "ie") m = RELMIX_METHOD_IE;
  if (method == "support") m = RELMIX_METHOD_SUPPORT;
  OwnedString volume;
  status = relmix_tuple_rmv(tuple.value, m, &volume.value);
  if (status != RELMIX_OK) return fail(status);
  std::cout << volume.value << "\n";
  return 0;
}

int cmd_classify(const std::string& file) {
  std::string text;
  if (!read_file(file, text)) {
    std::cerr << "error: cannot read " << file << "\n";
    return 2;
  }
  TupleHandle tuple;
  relmix_status status = relmix_tuple_parse(text.c_str(), &tuple.value);
  if (status != RELMIX_OK) return fail(status);
  OwnedString report;
  status = relmix_tuple_classify(tuple.value, &report.value);
  if (status != RELMIX_OK) return fail(status);
  std::cout << report.value;
  return 0;
}

int cmd_enumerate(int n, int volume, std::uint64_t cap, int jobs,
                  const std::string& out_dir) {
  relmix_classes* classes = nullptr;
  relmix_status status = relmix_enumerate_minimal(n, volume, cap, jobs, &classes);
  if (status != RELMIX_OK) return fail(status);
  std::unique_ptr<relmix_classes, void (*)(relmix_classes*)> guard(
      classes, relmix_classes_free);

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    std::cerr << "error: cannot create " << out_dir << ": " << ec.message()
              << "\n";
    return 2;
  }

  std::ostringstream index;
  const size_t count = relmix_classes_count(classes);
  for (size_t i = 0; i < count; ++i) {
    OwnedString doc, hash, volume_str;
    if ((status = relmix_classes_tuple_json(classes, i, &doc.value)) != RELMIX_OK ||
        (status = relmix_classes_hash(classes, i, &hash.value)) != RELMIX_OK ||
        (status = relmix_classes_rmv(classes, i, &volume_str.value)) != RELMIX_OK) {
      return fail(status);
    }
    std::ostringstream name;
    name << "class-" << std::setw(4) << std::setfill('0') << (i + 1) << ".tuple";
    std::ofstream out(std::filesystem::path(out_dir) / name.str(),
                      std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << name.str() << "\n";
      return 2;
    }
    out << doc.value << "\n";
    index << name.str() << ", " << hash.value << ", " << volume_str.value
          << "\n";
  }
  std::ofstream out(std::filesystem::path(out_dir) / "index.txt",
                    std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write index.txt\n";
    return 2;
  }
  out << index.str();
  std::cout << "classes: " << count << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, int n, int bound) {
  OwnedString report;
  relmix_status status = relmix_verify(suite.c_str(), n, bound, &report.value);
  if (status != RELMIX_OK && status != RELMIX_ERR_PROPERTY_VIOLATION) {
    return fail(status);
  }
  if (report.value) std::cout << report.value;
  return exit_code(status);
}

int cmd_render(const std::vector<std::string>& files, const std::string& out_path) {
  std::vector<PolyHandle> handles(files.size());
  std::vector<const relmix_poly*> raw;
  for (size_t i = 0; i < files.size(); ++i) {
    std::string text;
    if (!read_file(files[i], text)) {
      std::cerr << "error: cannot read " << files[i] << "\n";
      return 2;
    }
    relmix_status status = relmix_poly_parse(text.c_str(), &handles[i].value);
    if (status != RELMIX_OK) return fail(status);
    raw.push_back(handles[i].value);
  }
  OwnedString svg;
  relmix_status status = relmix_render_svg(raw.data(), raw.size(), &svg.value);
  if (status != RELMIX_OK) return fail(status);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 2;
  }
  out << svg.value;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice and relative mixed volumes of orthant polyhedra"};
  app.require_subcommand(1);

  std::string file, method = "both", suite, out_path;
  std::vector<std::string> files;
  int n = 2, volume = 2, bound = 2, jobs = 1;
  std::uint64_t cap = 1000000;
  if (const char* env = std::getenv("RELMIX_CAP")) {
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && parsed > 0) cap = parsed;
  }

  CLI::App* vol = app.add_subcommand("vol", "Lattice volume of C \\ B");
  vol->add_option("file", file)->required();

  CLI::App* mv = app.add_subcommand("mv", "Relative mixed volume of a tuple");
  mv->add_option("file", file)->required();
  mv->add_option("--method", method)
      ->check(CLI::IsMember({"both", "ie", "support"}));

  CLI::App* classify = app.add_subcommand("classify", "Classification report");
  classify->add_option("file", file)->required();

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "Enumerate minimal tuples of a volume");
  enumerate->add_option("-n", n, "dimension")->required();
  enumerate->add_option("-v", volume, "mixed volume")->required();
  enumerate->add_option("--cap", cap, "raw candidate cap");
  enumerate->add_option("--jobs", jobs, "worker threads");
  enumerate->add_option("-o", out_path, "output directory")->required();

  CLI::App* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"v1", "int", "lemma3", "stability"}));
  verify->add_option("-n", n, "dimension")->required();
  verify->add_option("--bound", bound, "coordinate bound")->required();

  CLI::App* render = app.add_subcommand("render", "Render 2-D polyhedra to SVG");
  render->add_option("files", files)->required();
  render->add_option("-o", out_path, "output SVG file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (vol->parsed()) return cmd_vol(file);
  if (mv->parsed()) return cmd_mv(file, method);
  if (classify->parsed()) return cmd_classify(file);
  if (enumerate->parsed()) return cmd_enumerate(n, volume, cap, jobs, out_path);
  if (verify->parsed()) return cmd_verify(suite, n, bound);
  if (render->parsed()) return cmd_render(files, out_path);
  return 2;
}
