#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "stt/analysis.hpp"
#include "stt/generators.hpp"
#include "stt/kcut.hpp"
#include "stt/opt.hpp"
#include "stt/rotation.hpp"
#include "stt/splay.hpp"
#include "stt/verify.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw stt::Error(stt::Errc::bad_argument, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw stt::Error(stt::Errc::bad_argument, "cannot open " + path + " for writing");
  out << text;
}

stt::UnrootedTree load_tree(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw stt::Error(stt::Errc::bad_argument, "cannot open " + path);
  return stt::UnrootedTree::parse(in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"search trees on trees: near-optimal static trees, bounded rotation distance, "
               "and self-adjusting search"};
  app.require_subcommand(1);

  // gen-tree
  auto* gen_tree_cmd = app.add_subcommand("gen-tree", "Generate a tree file");
  std::string gt_shape = "random", gt_out;
  int gt_n = 10;
  unsigned gt_seed = 1;
  gen_tree_cmd->add_option("--shape", gt_shape, "path|star|caterpillar|spider|random");
  gen_tree_cmd->add_option("--n", gt_n, "node count")->required();
  gen_tree_cmd->add_option("--seed", gt_seed, "random seed");
  gen_tree_cmd->add_option("--out", gt_out, "output file (default stdout)");

  // gen-seq
  auto* gen_seq_cmd = app.add_subcommand("gen-seq", "Generate a search sequence file");
  std::string gs_dist = "uniform", gs_out;
  int gs_n = 10;
  long long gs_m = 100;
  unsigned gs_seed = 1;
  double gs_param = 1.0;
  gen_seq_cmd->add_option("--dist", gs_dist, "uniform|zipf|sequential|single");
  gen_seq_cmd->add_option("--n", gs_n, "domain size")->required();
  gen_seq_cmd->add_option("--m", gs_m, "sequence length")->required();
  gen_seq_cmd->add_option("--seed", gs_seed, "random seed");
  gen_seq_cmd->add_option("--param", gs_param, "zipf exponent, or the node for single");
  gen_seq_cmd->add_option("--out", gs_out, "output file (default stdout)");

  // opt
  auto* opt_cmd = app.add_subcommand("opt", "Optimal search tree construction");
  std::string opt_tree, opt_freq, opt_out;
  int opt_k = 0, opt_t = 0, opt_cap = 10;
  bool opt_brute = false;
  opt_cmd->add_option("--tree", opt_tree, "search space file")->required();
  opt_cmd->add_option("--freq", opt_freq, "frequency file (default: uniform)");
  opt_cmd->add_option("--k", opt_k, "optimal k-cut tree (k=1: best rooted version)");
  opt_cmd->add_option("--t", opt_t, "(1+1/t)-approximation of the optimum");
  opt_cmd->add_flag("--brute", opt_brute, "exhaustive optimum (small trees)");
  opt_cmd->add_option("--brute-cap", opt_cap, "size cap for --brute");
  opt_cmd->add_option("--out", opt_out, "tree output file (default stdout)");

  // fix
  auto* fix_cmd = app.add_subcommand("fix", "Transform a search tree into a k-cut tree");
  std::string fix_tree, fix_in, fix_out;
  int fix_k = 2;
  bool fix_basic = false;
  fix_cmd->add_option("--tree", fix_tree, "search space file")->required();
  fix_cmd->add_option("--k", fix_k, "target boundary size")->required();
  fix_cmd->add_flag("--basic", fix_basic, "use the plain transform (k >= 3)");
  fix_cmd->add_option("input", fix_in, "search tree file")->required();
  fix_cmd->add_option("--out", fix_out, "output file (default stdout)");

  // transform
  auto* tr_cmd = app.add_subcommand("transform", "Rotation script between two k-cut trees");
  std::string tr_tree, tr_src, tr_dst;
  int tr_k = 2;
  bool tr_pointer = false;
  tr_cmd->add_option("--tree", tr_tree, "search space file")->required();
  tr_cmd->add_option("--k", tr_k, "boundary bound of both trees");
  tr_cmd->add_flag("--pointer", tr_pointer, "also run the pointer-machine pipeline");
  tr_cmd->add_option("src", tr_src, "source tree file")->required();
  tr_cmd->add_option("dst", tr_dst, "target tree file")->required();

  // splay
  auto* splay_cmd = app.add_subcommand("splay", "Serve a search sequence self-adjustingly");
  std::string sp_tree, sp_initial, sp_seq, sp_ledger;
  bool sp_trace = false;
  splay_cmd->add_option("--tree", sp_tree, "search space file")->required();
  splay_cmd->add_option("--initial", sp_initial, "initial search tree file (default: rooted at 0)");
  splay_cmd->add_option("seq", sp_seq, "search sequence file")->required();
  splay_cmd->add_option("--ledger", sp_ledger, "write the cost ledger CSV here");
  splay_cmd->add_flag("--trace", sp_trace, "per-search trace CSV on stdout");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run a property suite");
  std::string vf_suite;
  int vf_cap = 12, vf_threads = 0;
  long long vf_trials = 200;
  unsigned vf_seed = 1;
  verify_cmd->add_option("--suite", vf_suite, "stt|kcut|steiner|rotdist|splay|potential")
      ->required();
  verify_cmd->add_option("--size-cap", vf_cap, "largest tree size");
  verify_cmd->add_option("--trials", vf_trials, "trial count");
  verify_cmd->add_option("--seed", vf_seed, "base seed");
  verify_cmd->add_option("--threads", vf_threads, "worker threads (1 = serial reference)");

  // experiment
  auto* exp_cmd = app.add_subcommand("experiment", "Static-optimality experiment CSV");
  int ex_n = 10, ex_threads = 0, ex_cap = 10;
  long long ex_m = 10000, ex_trials = 6;
  unsigned ex_seed = 1;
  std::string ex_out;
  exp_cmd->add_option("--n", ex_n, "tree size");
  exp_cmd->add_option("--m", ex_m, "searches per instance");
  exp_cmd->add_option("--trials", ex_trials, "instances (shape and workload cycle)");
  exp_cmd->add_option("--seed", ex_seed, "base seed");
  exp_cmd->add_option("--brute-cap", ex_cap, "exact-optimum size cap");
  exp_cmd->add_option("--threads", ex_threads, "worker threads");
  exp_cmd->add_option("--out", ex_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen_tree_cmd) {
      stt::UnrootedTree tree = stt::gen_tree(stt::parse_tree_shape(gt_shape), gt_n, gt_seed);
      write_output(gt_out, tree.format());
      return 0;
    }

    if (*gen_seq_cmd) {
      auto seq = stt::gen_sequence(stt::parse_seq_dist(gs_dist), gs_n, gs_m, gs_seed, gs_param);
      write_output(gs_out, stt::format_sequence(seq));
      return 0;
    }

    if (*opt_cmd) {
      stt::UnrootedTree space = load_tree(opt_tree);
      stt::FrequencyMap freq = stt::FrequencyMap::uniform(space.size());
      if (!opt_freq.empty()) {
        std::istringstream in(read_file(opt_freq));
        freq = stt::FrequencyMap::parse(in, space.size());
      }
      int modes = (opt_k > 0) + (opt_t > 0) + (opt_brute ? 1 : 0);
      if (modes != 1)
        throw stt::Error(stt::Errc::bad_argument, "pick exactly one of --k, --t, --brute");
      stt::OptResult result = [&] {
        if (opt_brute) return stt::brute_opt(space, freq, opt_cap);
        if (opt_t > 0) return stt::ptas(space, opt_t, freq);
        if (opt_k == 1) return stt::best_rooted(space, freq);
        return stt::opt_kcut(space, opt_k, freq);
      }();
      write_output(opt_out, result.tree.format());
      std::cout << "cost=" << result.cost << "\n";
      return 0;
    }

    if (*fix_cmd) {
      stt::UnrootedTree space = load_tree(fix_tree);
      stt::SearchTree tree = stt::SearchTree::parse_string(read_file(fix_in), space);
      stt::SearchTree fixed = fix_basic ? stt::fix(tree, fix_k) : stt::fix_improved(tree, fix_k);
      write_output(fix_out, fixed.format());
      return 0;
    }

    if (*tr_cmd) {
      stt::UnrootedTree space = load_tree(tr_tree);
      stt::SearchTree src = stt::SearchTree::parse_string(read_file(tr_src), space);
      stt::SearchTree dst = stt::SearchTree::parse_string(read_file(tr_dst), space);
      stt::RotationScript script = stt::transform(src, dst, tr_k);
      for (stt::NodeId v : script.rotate_at_nodes()) std::cout << v << "\n";
      long long n = space.size();
      long long bound = (2LL * tr_k - 1) * n - (tr_k + 1LL) * tr_k + 1;
      std::cout << "rotations=" << script.size() << " bound=" << bound << "\n";
      if (tr_pointer) {
        stt::SearchTree work = src;
        stt::CostLedger ledger;
        stt::TransformStats stats = stt::transform_pointer(work, dst, tr_k, ledger);
        std::cout << "pointer_moves=" << stats.moves << " pointer_rotations=" << stats.rotations
                  << "\n";
      }
      return 0;
    }

    if (*splay_cmd) {
      stt::UnrootedTree space = load_tree(sp_tree);
      stt::SearchTree tree = sp_initial.empty()
                                 ? stt::SearchTree::rooted_at(space, 0)
                                 : stt::SearchTree::parse_string(read_file(sp_initial), space);
      if (!tree.is_steiner_closed()) tree = stt::steinerize(tree);
      std::vector<stt::NodeId> seq = stt::parse_sequence(read_file(sp_seq), space.size());
      stt::CostLedger ledger;
      if (sp_trace) std::cout << "search,node,depth,rotations,zigzig,zigzag,zig\n";
      long long index = 0;
      for (stt::NodeId x : seq) {
        stt::SearchStats stats = stt::search(tree, x, ledger, nullptr);
        ++index;
        if (sp_trace)
          std::cout << index << "," << x << "," << stats.depth_before << "," << stats.rotations
                    << "," << stats.zigzig << "," << stats.zigzag << "," << stats.zig << "\n";
      }
      if (!sp_ledger.empty())
        write_output(sp_ledger, stt::format_ledger_csv(ledger));
      else
        std::cout << stt::format_ledger_csv(ledger);
      return 0;
    }

    if (*verify_cmd) {
      stt::verify::SuiteOptions options;
      options.size_cap = vf_cap;
      options.trials = vf_trials;
      options.seed = vf_seed;
      options.threads = vf_threads;
      stt::verify::SuiteResult result = stt::verify::run_suite(vf_suite, options);
      std::cout << "suite=" << result.suite << " checks=" << result.checks
                << " failures=" << result.failures << "\n";
      for (const std::string& msg : result.messages) std::cout << "  " << msg << "\n";
      return result.ok() ? 0 : 1;
    }

    if (*exp_cmd) {
      // Instances are independent; fan them out and merge rows by index.
      std::vector<stt::ExperimentRow> rows(ex_trials);
      std::vector<std::string> errors(ex_trials);
      auto run_one = [&](long long trial) {
        try {
          const char* dists[] = {"uniform", "zipf", "sequential"};
          stt::Rng rng(ex_seed + 0x9e3779b9u * static_cast<unsigned>(trial + 1));
          stt::UnrootedTree space = stt::verify::random_trial_tree(trial, ex_n, rng);
          std::string dist = dists[trial % 3];
          auto seq = stt::gen_sequence(stt::parse_seq_dist(dist), space.size(), ex_m, rng());
          rows[trial] = stt::static_optimality_experiment(
              space, seq, dist + "-" + std::to_string(trial), ex_cap);
        } catch (const std::exception& e) {
          errors[trial] = e.what();
        }
      };
#ifdef _OPENMP
      int workers = ex_threads > 0 ? ex_threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(workers)
      for (long long trial = 0; trial < ex_trials; ++trial) run_one(trial);
#else
      for (long long trial = 0; trial < ex_trials; ++trial) run_one(trial);
#endif
      std::ostringstream csv;
      csv << stt::experiment_csv_header() << "\n";
      bool all_ok = true;
      for (long long trial = 0; trial < ex_trials; ++trial) {
        if (!errors[trial].empty())
          throw stt::Error(stt::Errc::internal,
                           "experiment trial " + std::to_string(trial) + ": " + errors[trial]);
        const stt::ExperimentRow& row = rows[trial];
        csv << stt::format_experiment_row(row) << "\n";
        all_ok = all_ok && row.bound_holds && row.violations == 0 &&
                 (!row.tight_bound_checked || row.tight_bound_holds);
      }
      write_output(ex_out, csv.str());
      return all_ok ? 0 : 1;
    }
  } catch (const stt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
