#include "wps/jobfile.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "wps/errors.hpp"
#include "wps/parse.hpp"

namespace wps {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<long long> parse_int_list(const std::string& value, const std::string& where) {
    std::vector<long long> out;
    std::string item;
    std::istringstream is(value);
    while (std::getline(is, item, ',')) {
        item = trim(item);
        if (item.empty()) throw input_error(where + ": empty entry in integer list");
        try {
            size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw input_error(where + ": bad integer '" + item + "'");
        }
    }
    if (out.empty()) throw input_error(where + ": empty integer list");
    return out;
}

struct ModelBlock {
    std::optional<long long> m, n;
    std::optional<std::vector<long long>> a, b;

    ModelSpec build(const std::string& where) const {
        if (!m) throw input_error(where + ": missing key m");
        if (!n) throw input_error(where + ": missing key n");
        std::vector<long long> ev = a ? *a : std::vector<long long>(*m + 1, 1);
        std::vector<long long> od = b ? *b : std::vector<long long>(*n, 1);
        return ModelSpec(static_cast<int>(*m), static_cast<int>(*n), WeightSystem(ev, od));
    }
};

} // namespace

JobFile parse_job_text(const std::string& text, const std::string& origin) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    std::string section;
    ModelBlock model, model2;
    bool saw_model = false, saw_model2 = false;
    std::vector<std::pair<std::string, std::string>> generators;
    bool assume_irreducible = false, assume_smooth = false;

    auto where = [&](int ln) { return origin + ":" + std::to_string(ln); };

    while (std::getline(is, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[') {
            if (t.back() != ']') throw input_error(where(lineno) + ": unterminated section header");
            section = t.substr(1, t.size() - 2);
            if (section != "model" && section != "model2" && section != "variety" &&
                section != "assume")
                throw input_error(where(lineno) + ": unknown section [" + section + "]");
            if (section == "model") saw_model = true;
            if (section == "model2") saw_model2 = true;
            continue;
        }
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw input_error(where(lineno) + ": expected 'key = value'");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key.empty()) throw input_error(where(lineno) + ": empty key");
        if (section == "model" || section == "model2") {
            ModelBlock& blk = section == "model" ? model : model2;
            if (key == "m" || key == "n") {
                long long v;
                try {
                    v = std::stoll(value);
                } catch (const std::exception&) {
                    throw input_error(where(lineno) + ": bad integer for " + key);
                }
                (key == "m" ? blk.m : blk.n) = v;
            } else if (key == "a" || key == "b") {
                auto list = parse_int_list(value, where(lineno));
                (key == "a" ? blk.a : blk.b) = list;
            } else {
                throw input_error(where(lineno) + ": unknown model key '" + key + "'");
            }
        } else if (section == "variety") {
            if (key.size() < 2 || key[0] != 'f' ||
                !std::all_of(key.begin() + 1, key.end(),
                             [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw input_error(where(lineno) + ": generator keys look like f1, f2, ...");
            if (value.size() < 2 || value.front() != '"' || value.back() != '"')
                throw input_error(where(lineno) + ": generator expressions are double-quoted");
            generators.emplace_back(key, value.substr(1, value.size() - 2));
        } else if (section == "assume") {
            bool flag;
            if (value == "true") flag = true;
            else if (value == "false") flag = false;
            else throw input_error(where(lineno) + ": assume values are true or false");
            if (key == "assume_irreducible") assume_irreducible = flag;
            else if (key == "assume_smooth") assume_smooth = flag;
            else throw input_error(where(lineno) + ": unknown assumption '" + key + "'");
        } else {
            throw input_error(where(lineno) + ": key outside of any section");
        }
    }
    if (!saw_model) throw input_error(origin + ": missing [model] section");
    if (saw_model2 && !model2.m) throw input_error(origin + ": [model2] section is incomplete");

    JobFile jf{model.build(origin + " [model]"),
               saw_model2 ? std::optional<ModelSpec>(model2.build(origin + " [model2]"))
                          : std::nullopt,
               {},
               {},
               assume_irreducible,
               assume_smooth};
    for (auto& [name, text_expr] : generators) {
        jf.generator_names.push_back(name);
        jf.generator_texts.push_back(text_expr);
    }
    return jf;
}

JobFile parse_job_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open job file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_job_text(buf.str(), path);
}

VarietyJob JobFile::to_job() const {
    if (generator_texts.empty())
        throw input_error("job file has no [variety] generators");
    int ev = model.m + 1 + (model2 ? model2->m + 1 : 0);
    int ov = model.n + (model2 ? model2->n : 0);
    std::vector<Poly> gens;
    for (size_t i = 0; i < generator_texts.size(); ++i) {
        try {
            gens.push_back(parse_polynomial(generator_texts[i], ev, ov));
        } catch (const input_error& e) {
            throw input_error("generator " + generator_names[i] + ": " + e.what());
        }
    }
    if (model2)
        return VarietyJob(model, *model2, std::move(gens), generator_names, assume_irreducible,
                          assume_smooth);
    return VarietyJob(model, std::move(gens), generator_names, assume_irreducible, assume_smooth);
}

} // namespace wps
