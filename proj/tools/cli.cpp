// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include "recur/error.hpp"
#include "recur/general.hpp"
#include "recur/io.hpp"
#include "recur/kronecker.hpp"
#include "recur/oracle.hpp"
#include "recur/quadratic.hpp"
#include "recur/waring.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace recur::cli {

namespace {

json read_json(const std::string &path)
{
	std::ifstream in;
	std::istream *src = &std::cin;
	if (path != "-") {
		in.open(path);
		if (!in)
			throw Error(ErrorKind::parse_error, "cannot open '" + path + "'");
		src = &in;
	}
	try {
		return json::parse(*src);
	} catch (const json::parse_error &e) {
		throw Error(ErrorKind::parse_error, path + ": " + e.what());
	}
}

std::vector<std::string> split_list(const std::string &s, char sep = ',')
{
	std::vector<std::string> out;
	std::string cur;
	std::istringstream in(s);
	while (std::getline(in, cur, sep))
		if (!cur.empty())
			out.push_back(cur);
	return out;
}

/* Options shared by the instance-taking subcommands. */
struct InstanceOptions {
	std::string poly_path;
	std::string alphas;
	int degree = 0;
	std::string range;
	std::string config_path;
	std::uint64_t brute_threshold = 0;
	int precision_bits = 0;

	void attach(CLI::App &app, bool need_range)
	{
		app.add_option("--poly", poly_path, "instance JSON file ('-' for stdin)");
		app.add_option("--alphas", alphas, "comma-separated coefficients of the monomial system alpha_j n^k");
		app.add_option("--degree", degree, "exponent k for --alphas");
		auto *r = app.add_option("--range", range, "search range N (decimal)");
		if (need_range)
			r->description("search range N (decimal); overrides the instance file");
		app.add_option("--config", config_path, "JSON file with solver settings");
		app.add_option("--brute-threshold", brute_threshold, "scan exactly up to this range");
		app.add_option("--precision-bits", precision_bits, "bits kept for sqrt:m coefficients");
	}

	/* flags > environment > instance schedule > config file > defaults */
	SolverConfig config(const json &schedule) const
	{
		SolverConfig cfg;
		if (!config_path.empty())
			apply_overrides(read_json(config_path), cfg);
		apply_overrides(schedule, cfg);
		if (const char *env = std::getenv("RECUR_PRECISION_BITS"))
			cfg.precision_bits = static_cast<int>(detail_parse_u64(env, "RECUR_PRECISION_BITS"));
		if (const char *env = std::getenv("RECUR_BRUTE_CAP"))
			cfg.brute_threshold = detail_parse_u64(env, "RECUR_BRUTE_CAP");
		if (brute_threshold != 0)
			cfg.brute_threshold = brute_threshold;
		if (precision_bits != 0)
			cfg.precision_bits = precision_bits;
		return cfg;
	}

	static std::uint64_t detail_parse_u64(const char *text, const char *name)
	{
		BigInt v = parse_bigint(text);
		if (sgn(v) < 0 || !mpz_fits_ulong_p(v.get_mpz_t()))
			throw Error(ErrorKind::parse_error, std::string(name) + " must be a nonnegative integer");
		return mpz_get_ui(v.get_mpz_t());
	}

	struct Loaded {
		Instance inst;
		SolverConfig cfg;
		bool monomial = false;
	};

	Loaded load(bool require_range) const
	{
		Loaded l;
		if (!poly_path.empty() && !alphas.empty())
			throw Error(ErrorKind::invalid_instance, "give either --poly or --alphas, not both");
		if (!poly_path.empty()) {
			json j = read_json(poly_path);
			if (!range.empty() && !j.contains("range"))
				j["range"] = range;
			l.inst = instance_from_json(j);
			l.cfg = config(l.inst.schedule);
		} else {
			if (alphas.empty())
				throw Error(ErrorKind::invalid_instance, "alphas: empty coefficient list (use --alphas or --poly)");
			if (degree < 1)
				throw Error(ErrorKind::invalid_instance, "degree: --degree must be >= 1 with --alphas");
			l.cfg = config(json::object());
			std::vector<TorusValue> a;
			for (const auto &s : split_list(alphas)) {
				try {
					a.push_back(parse_coefficient(s, l.cfg.precision_bits));
				} catch (const Error &e) {
					throw Error(e.kind(), "alphas: " + std::string(e.what()));
				}
			}
			if (a.empty())
				throw Error(ErrorKind::invalid_instance, "alphas: empty coefficient list");
			l.inst.polys = PolySystem::monomials(a, degree);
			l.monomial = true;
			if (range.empty() && require_range)
				throw Error(ErrorKind::invalid_instance, "range: --range is required with --alphas");
			l.inst.range = 1;
		}
		if (!range.empty()) {
			try {
				l.inst.range = parse_bigint(range);
			} catch (const Error &e) {
				throw Error(e.kind(), "range: " + std::string(e.what()));
			}
			if (l.inst.range < 1)
				throw Error(ErrorKind::invalid_instance, "range: must be >= 1");
		}
		return l;
	}
};

Certificate dispatch(const PolySystem &polys, bool monomial, const BigInt &N, const SolverConfig &cfg)
{
	if (monomial) {
		const auto alphas = polys.leading();
		if (polys.degree == 2)
			return quadratic_recurrence(alphas, N, cfg);
		return monomial_recurrence(alphas, polys.degree, N, cfg);
	}
	if (polys.degree <= 2)
		return quadratic_poly_recurrence(polys, N, cfg);
	return poly_recurrence(polys, N, cfg);
}

std::string csv_field(const std::string &s)
{
	if (s.find_first_of(",\"\r\n") == std::string::npos)
		return s;
	std::string q = "\"";
	for (char c : s)
		q += c == '"' ? std::string("\"\"") : std::string(1, c);
	return q + "\"";
}

void print_table(std::ostream &out, const SolverConfig &cfg, const std::string &range, std::size_t d)
{
	out << "Bound shapes (guaranteed sup_j ||h_j(n)|| for some 1 <= n <= N)\n"
	    << "  linear (box pigeonhole):      1/floor(N^(1/d))\n"
	    << "  quadratic monomials:          exp(-c (d^-10 log N)^(1/4))\n"
	    << "  quadratic polynomials:        exp(-c (d^-14 log N)^(1/4))\n"
	    << "  degree-k monomials:           exp(-(C_k d^5)^-1 (log N)^(1/C_k))\n"
	    << "  degree-k polynomials:         exp(-(4^k k! D_k d^(5k))^-1 (log N)^(1/D_k))\n"
	    << "  Fourier-analytic baseline:    d N^(-c/d^2) (quadratic), k^2 d N^(-c_k/d^2)\n"
	    << "  constants are not instantiated; every answer carries an exact certificate\n\n";
	out << "Seed witnesses by degree\n  k  budget  entries  levels\n";
	for (int k = 2; k <= cfg.max_degree; ++k) {
		const std::size_t terms = base_terms(k);
		std::size_t levels = 0;
		while ((std::size_t{1} << levels) < terms)
			++levels;
		out << "  " << k << "  " << default_waring_budget(k) << "  " << terms << "  " << levels << "\n";
	}
	out << "\nDefaults\n"
	    << "  brute_threshold     " << cfg.brute_threshold << "\n"
	    << "  oracle_scan_cap     " << cfg.oracle_scan_cap << "\n"
	    << "  kronecker_box_cap   " << cfg.kronecker_box_cap << "\n"
	    << "  pigeonhole_map_cap  " << cfg.pigeonhole_map_cap << "\n"
	    << "  waring_dp_cap       " << cfg.waring_dp_cap << "\n"
	    << "  waring_base_cap     " << cfg.waring_base_cap << "\n"
	    << "  chain_system_cap    " << cfg.chain_system_cap << "\n"
	    << "  max_chain_length    " << cfg.max_chain_length << "\n"
	    << "  max_degree          " << cfg.max_degree << "\n"
	    << "  precision_bits      " << cfg.precision_bits << "\n"
	    << "  split N'            floor(N^(1/4))\n"
	    << "  grid g              floor(2^((m-1)/d))\n";
	if (range.empty())
		return;
	const BigInt N = parse_bigint(range);
	out << "\nSchedules for N = " << N.get_str() << ", d = " << d << "\n";
	for (int k = 2; k <= cfg.max_degree; ++k) {
		out << "  k = " << k << ":";
		try {
			RecursionBudget b = plan_recursion(d, k, N, cfg);
			for (std::size_t l = 0; l < b.levels.size(); ++l)
				out << " [m=" << b.levels[l].m << " X=" << b.levels[l].X.get_str()
				    << " g=" << b.levels[l].g.get_str() << "]";
			out << " seed range " << b.base_range.get_str() << "\n";
		} catch (const Error &e) {
			out << " " << e.what() << "\n";
		}
	}
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Simultaneous recurrence mod 1 with exact certificates", "recur"};
	app.require_subcommand(1);

	InstanceOptions solve_opts;
	auto *solve = app.add_subcommand("solve", "find n <= N making every ||h_j(n)|| small");
	solve_opts.attach(*solve, true);

	InstanceOptions verify_opts;
	std::string cert_path;
	auto *verify = app.add_subcommand("verify", "re-check a certificate exactly");
	verify->add_option("--cert", cert_path, "certificate JSON ('-' for stdin)")->required();
	verify_opts.attach(*verify, false);

	InstanceOptions oracle_opts;
	auto *oracle = app.add_subcommand("oracle", "exhaustive minimum over 1..N as a fixture record");
	oracle_opts.attach(*oracle, true);

	std::string bench_ranges, bench_alphas, decay_path;
	int bench_degree = 2, bench_seed = 1;
	std::size_t bench_d = 1, bench_instances = 1;
	bool no_timing = false;
	std::string bench_config;
	std::uint64_t bench_brute = 0;
	auto *bench = app.add_subcommand("bench", "sweep N and tabulate the achieved bound as CSV");
	bench->add_option("--ranges", bench_ranges, "comma-separated list of N");
	bench->add_option("--degree", bench_degree, "exponent k");
	bench->add_option("--d", bench_d, "number of targets per generated instance");
	bench->add_option("--instances", bench_instances, "generated instances per N");
	bench->add_option("--seed", bench_seed, "instance generator seed");
	bench->add_option("--alphas", bench_alphas, "fixed targets instead of generated ones");
	bench->add_option("--decay", decay_path, "also write whitespace-separated 'N achieved' rows here");
	bench->add_option("--config", bench_config, "JSON file with solver settings");
	bench->add_option("--brute-threshold", bench_brute, "scan exactly up to this range");
	bench->add_flag("--no-timing", no_timing, "write runtime_ms as 0 for reproducible output");

	std::string table_range;
	std::size_t table_d = 1;
	auto *table = app.add_subcommand("table", "print schedule defaults and bound shapes");
	table->add_option("--range", table_range, "also print the schedule for this N");
	table->add_option("--d", table_d, "number of targets for the printed schedule");

	std::vector<std::string> argv_rev(args.rbegin(), args.rend());
	try {
		app.parse(argv_rev);
	} catch (const CLI::CallForHelp &) {
		out << app.help();
		return exit_ok;
	} catch (const CLI::ParseError &e) {
		err << "recur: " << e.what() << "\n";
		return exit_input_error;
	}

	try {
		if (*solve) {
			auto l = solve_opts.load(true);
			Certificate c = dispatch(l.inst.polys, l.monomial, l.inst.range, l.cfg);
			out << to_json(c, &l.inst.polys).dump(2) << "\n";
			return c.fallback ? exit_fallback : exit_ok;
		}
		if (*verify) {
			json cj = read_json(cert_path);
			Certificate c = certificate_from_json(cj);
			PolySystem polys;
			if (!verify_opts.poly_path.empty() || !verify_opts.alphas.empty()) {
				if (verify_opts.degree == 0 && !verify_opts.alphas.empty())
					verify_opts.degree = c.degree;
				polys = verify_opts.load(false).inst.polys;
			} else {
				if (!cj.contains("coeffs"))
					throw Error(ErrorKind::invalid_instance,
					            "coeffs: certificate has no embedded instance, pass --poly or --alphas");
				polys = poly_from_json(json{{"degree", c.degree}, {"coeffs", cj.at("coeffs")}});
			}
			VerifyReport rep = verify_certificate(c, polys);
			json r{{"ok", rep.ok}, {"diagnostics", rep.diagnostics}};
			out << r.dump(2) << "\n";
			return rep.ok ? exit_ok : exit_input_error;
		}
		if (*oracle) {
			auto l = oracle_opts.load(true);
			if (!mpz_fits_ulong_p(l.inst.range.get_mpz_t()))
				throw Error(ErrorKind::cap_exceeded, "range: too large for the oracle scan");
			OracleResult r = brute_force_min(l.inst.polys, mpz_get_ui(l.inst.range.get_mpz_t()), l.cfg);
			out << to_json(r, l.inst.polys).dump(2) << "\n";
			return exit_ok;
		}
		if (*table) {
			print_table(out, SolverConfig{}, table_range, table_d);
			return exit_ok;
		}
		if (*bench) {
			InstanceOptions cfg_opts;
			cfg_opts.config_path = bench_config;
			cfg_opts.brute_threshold = bench_brute;
			const SolverConfig cfg = cfg_opts.config(json::object());
			if (bench_degree < 1)
				throw Error(ErrorKind::invalid_instance, "degree: must be >= 1");
			std::vector<BigInt> ranges;
			for (const auto &s : split_list(bench_ranges)) {
				ranges.push_back(parse_bigint(s));
				if (ranges.back() < 1)
					throw Error(ErrorKind::invalid_instance, "ranges: every N must be >= 1");
			}
			std::vector<std::vector<TorusValue>> instances;
			if (!bench_alphas.empty()) {
				std::vector<TorusValue> a;
				for (const auto &s : split_list(bench_alphas))
					a.push_back(parse_coefficient(s, cfg.precision_bits));
				instances.push_back(std::move(a));
			} else {
				if (bench_d < 1)
					throw Error(ErrorKind::invalid_instance, "d: must be >= 1");
				std::mt19937_64 rng(static_cast<std::uint64_t>(bench_seed));
				for (std::size_t i = 0; i < bench_instances; ++i) {
					std::vector<TorusValue> a;
					for (std::size_t j = 0; j < bench_d; ++j) {
						const std::uint64_t q = 2 + rng() % 999'999;
						const std::uint64_t p = 1 + rng() % (q - 1);
						a.push_back(TorusValue::from_rational(BigInt(std::to_string(p)), BigInt(std::to_string(q))));
					}
					instances.push_back(std::move(a));
				}
			}
			std::ofstream decay;
			if (!decay_path.empty()) {
				decay.open(decay_path);
				if (!decay)
					throw Error(ErrorKind::parse_error, "cannot write '" + decay_path + "'");
				decay << "# N achieved instance\n";
			}
			out << "N,d,k,achieved,runtime_ms\n";
			bool any_fallback = false;
			for (std::size_t i = 0; i < instances.size(); ++i)
				for (const auto &N : ranges) {
					const auto t0 = std::chrono::steady_clock::now();
					Certificate c = bench_degree == 2 ? quadratic_recurrence(instances[i], N, cfg)
					                                  : monomial_recurrence(instances[i], bench_degree, N, cfg);
					const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
					                    std::chrono::steady_clock::now() - t0)
					                    .count();
					any_fallback = any_fallback || c.fallback;
					out << csv_field(N.get_str()) << "," << instances[i].size() << "," << bench_degree << ","
					    << csv_field(rational_str(c.achieved)) << "," << (no_timing ? 0 : ms) << "\n";
					if (decay)
						decay << N.get_str() << " " << c.achieved.get_d() << " " << i << "\n";
				}
			return any_fallback ? exit_fallback : exit_ok;
		}
	} catch (const Error &e) {
		err << "recur: " << e.what() << "\n";
		return exit_input_error;
	}
	return exit_input_error;
}

} // namespace recur::cli
