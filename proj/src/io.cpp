// SPDX-License-Identifier: Apache-2.0

#include "recur/io.hpp"

#include "recur/error.hpp"

namespace recur {

namespace {

const json &field(const json &j, const char *name)
{
	if (!j.is_object() || !j.contains(name))
		throw Error(ErrorKind::parse_error, std::string("missing field '") + name + "'");
	return j.at(name);
}

std::string str_field(const json &j, const char *name)
{
	const json &v = field(j, name);
	if (v.is_string())
		return v.get<std::string>();
	if (v.is_number_integer())
		return std::to_string(v.get<long long>());
	throw Error(ErrorKind::parse_error, std::string("field '") + name + "' must be a decimal string");
}

int int_field(const json &j, const char *name)
{
	const json &v = field(j, name);
	if (!v.is_number_integer())
		throw Error(ErrorKind::parse_error, std::string("field '") + name + "' must be an integer");
	return v.get<int>();
}

template <class F>
auto with_context(const std::string &where, F &&f)
{
	try {
		return f();
	} catch (const Error &e) {
		throw Error(e.kind(), where + ": " + e.what());
	}
}

} // namespace

TorusValue parse_coefficient(const std::string &s, int precision_bits)
{
	if (s.rfind("sqrt:", 0) == 0) {
		BigInt m = parse_bigint(s.substr(5));
		if (sgn(m) < 0)
			throw Error(ErrorKind::parse_error, "sqrt of a negative number '" + s + "'");
		const BigInt scale = ipow(2, static_cast<unsigned long>(precision_bits));
		BigInt root;
		BigInt scaled = m * scale * scale;
		mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
		return TorusValue::from_rational(root, scale);
	}
	return TorusValue::from_rational(parse_rational(s));
}

json to_json(const PolySystem &polys)
{
	json rows = json::array();
	for (const auto &row : polys.coeffs) {
		json r = json::array();
		for (const auto &c : row)
			r.push_back(c.str());
		rows.push_back(std::move(r));
	}
	return json{{"degree", polys.degree}, {"coeffs", std::move(rows)}};
}

PolySystem poly_from_json(const json &j)
{
	PolySystem p;
	p.degree = int_field(j, "degree");
	const json &rows = field(j, "coeffs");
	if (!rows.is_array())
		throw Error(ErrorKind::parse_error, "field 'coeffs' must be an array of arrays");
	for (std::size_t r = 0; r < rows.size(); ++r) {
		if (!rows[r].is_array())
			throw Error(ErrorKind::parse_error, "coeffs[" + std::to_string(r) + "] must be an array");
		std::vector<TorusValue> row;
		for (std::size_t e = 0; e < rows[r].size(); ++e) {
			const std::string where = "coeffs[" + std::to_string(r) + "][" + std::to_string(e) + "]";
			if (!rows[r][e].is_string())
				throw Error(ErrorKind::parse_error, where + " must be a \"p/q\" string");
			row.push_back(with_context(where, [&] {
				return TorusValue::from_rational(parse_rational(rows[r][e].get<std::string>()));
			}));
		}
		p.coeffs.push_back(std::move(row));
	}
	p.validate();
	return p;
}

Instance instance_from_json(const json &j)
{
	Instance inst;
	inst.polys = poly_from_json(j);
	inst.range = with_context("range", [&] { return parse_bigint(str_field(j, "range")); });
	if (inst.range < 1)
		throw Error(ErrorKind::invalid_instance, "range: must be >= 1");
	if (j.contains("schedule")) {
		if (!j.at("schedule").is_object())
			throw Error(ErrorKind::parse_error, "field 'schedule' must be an object");
		inst.schedule = j.at("schedule");
	}
	return inst;
}

json to_json(const Instance &inst)
{
	json j = to_json(inst.polys);
	j["range"] = inst.range.get_str();
	if (!inst.schedule.empty())
		j["schedule"] = inst.schedule;
	return j;
}

void apply_overrides(const json &schedule, SolverConfig &cfg)
{
	for (const auto &[key, value] : schedule.items()) {
		auto u64 = [&, &key = key, &value = value]() -> std::uint64_t {
			if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<long long>() >= 0))
				throw Error(ErrorKind::parse_error, "schedule." + key + " must be a nonnegative integer");
			return value.get<std::uint64_t>();
		};
		if (key == "brute_threshold")
			cfg.brute_threshold = u64();
		else if (key == "oracle_scan_cap")
			cfg.oracle_scan_cap = u64();
		else if (key == "kronecker_box_cap")
			cfg.kronecker_box_cap = u64();
		else if (key == "pigeonhole_map_cap")
			cfg.pigeonhole_map_cap = u64();
		else if (key == "waring_dp_cap")
			cfg.waring_dp_cap = u64();
		else if (key == "waring_base_cap")
			cfg.waring_base_cap = u64();
		else if (key == "max_degree")
			cfg.max_degree = static_cast<int>(u64());
		else if (key == "chain_system_cap")
			cfg.chain_system_cap = u64();
		else if (key == "precision_bits")
			cfg.precision_bits = static_cast<int>(u64());
		else if (key == "max_chain_length")
			cfg.max_chain_length = u64();
		else
			throw Error(ErrorKind::parse_error, "schedule: unknown key '" + key + "'");
	}
}

json to_json(const Certificate &cert, const PolySystem *polys)
{
	json res = json::array();
	for (const auto &r : cert.residuals)
		res.push_back(r.str());
	json steps = json::array();
	for (const auto &t : cert.trace) {
		json s = json::object();
		s["stage"] = t.stage;
		s["depth"] = t.depth;
		for (const auto &[k, v] : t.fields)
			s[k] = v;
		steps.push_back(std::move(s));
	}
	json j{{"n", cert.n.get_str()},
	       {"range", cert.range.get_str()},
	       {"degree", cert.degree},
	       {"residuals", std::move(res)},
	       {"achieved", rational_str(cert.achieved)},
	       {"trace", json{{"method", cert.method}, {"fallback", cert.fallback}, {"steps", std::move(steps)}}}};
	if (polys)
		j["coeffs"] = to_json(*polys).at("coeffs");
	return j;
}

Certificate certificate_from_json(const json &j)
{
	Certificate c;
	c.n = with_context("n", [&] { return parse_bigint(str_field(j, "n")); });
	c.range = with_context("range", [&] { return parse_bigint(str_field(j, "range")); });
	c.degree = int_field(j, "degree");
	const json &res = field(j, "residuals");
	if (!res.is_array())
		throw Error(ErrorKind::parse_error, "field 'residuals' must be an array");
	for (std::size_t i = 0; i < res.size(); ++i) {
		const std::string where = "residuals[" + std::to_string(i) + "]";
		if (!res[i].is_string())
			throw Error(ErrorKind::parse_error, where + " must be a \"p/q\" string");
		c.residuals.push_back(TorusDistance(with_context(where, [&] { return parse_rational(res[i].get<std::string>()); })));
	}
	c.achieved = with_context("achieved", [&] { return parse_rational(str_field(j, "achieved")); });
	if (j.contains("trace")) {
		const json &t = j.at("trace");
		if (t.contains("method") && t.at("method").is_string())
			c.method = t.at("method").get<std::string>();
		if (t.contains("fallback") && t.at("fallback").is_boolean())
			c.fallback = t.at("fallback").get<bool>();
		if (t.contains("steps") && t.at("steps").is_array())
			for (const auto &s : t.at("steps")) {
				TraceEntry e;
				for (const auto &[k, v] : s.items()) {
					if (k == "stage" && v.is_string())
						e.stage = v.get<std::string>();
					else if (k == "depth" && v.is_number_integer())
						e.depth = v.get<int>();
					else if (v.is_string())
						e.add(k, v.get<std::string>());
				}
				c.trace.push_back(std::move(e));
			}
	}
	return c;
}

json to_json(const OracleResult &r, const PolySystem &polys)
{
	return json{{"polys", to_json(polys)},
	            {"N", std::to_string(r.scanned)},
	            {"n_star", r.n_star.get_str()},
	            {"value", r.value.str()}};
}

} // namespace recur
