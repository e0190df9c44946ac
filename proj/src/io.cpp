#include "rol/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace rol::io {

namespace {

Json check_json(const Check& c, double tol)
{
    return Json{{"holds", c.holds}, {"residual", c.residual}, {"tol", tol}};
}

Json class_json(const InverseClass& cls)
{
    Json residuals = Json::array();
    for (double r : cls.residuals) residuals.push_back(r);
    return Json{{"label", cls.label()},
                {"conditions", cls.satisfied()},
                {"residuals", residuals},
                {"tol", cls.tol}};
}

std::string format_double(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

double parse_double(std::string_view cell, std::size_t line)
{
    while (!cell.empty() && std::isspace(static_cast<unsigned char>(cell.front()))) cell.remove_prefix(1);
    while (!cell.empty() && std::isspace(static_cast<unsigned char>(cell.back()))) cell.remove_suffix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size())
        throw ParseError("line " + std::to_string(line) + ": '" + std::string(cell) + "' is not a number");
    return value;
}

std::size_t expect_size(const Json& j, const char* key)
{
    if (!j.contains(key) || !j[key].is_number_unsigned())
        throw ParseError(std::string("matrix JSON needs a non-negative integer '") + key + "'");
    return j[key].get<std::size_t>();
}

} // namespace

Format format_from_string(const std::string& name)
{
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    throw ParseError("unknown format '" + name + "' (expected json or csv)");
}

Json matrix_to_json(const Matrix& m)
{
    Json data = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Complex z = m(i, j);
            if (m.is_real()) row.push_back(z.real());
            else row.push_back(Json::array({z.real(), z.imag()}));
        }
        data.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"field", to_string(m.field())}, {"data", data}};
}

Matrix matrix_from_json(const Json& j)
{
    if (!j.is_object()) throw ParseError("matrix JSON must be an object");
    const std::size_t rows = expect_size(j, "rows");
    const std::size_t cols = expect_size(j, "cols");
    Field field = Field::Real;
    if (j.contains("field")) {
        if (!j["field"].is_string()) throw ParseError("'field' must be a string");
        field = field_from_string(j["field"].get<std::string>());
    }
    if (!j.contains("data") || !j["data"].is_array() || j["data"].size() != rows)
        throw ParseError("'data' must hold " + std::to_string(rows) + " rows");

    std::vector<Complex> values;
    values.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const Json& row = j["data"][i];
        if (!row.is_array() || row.size() != cols)
            throw ParseError("row " + std::to_string(i) + " must hold " + std::to_string(cols) + " entries");
        for (const Json& e : row) {
            if (e.is_number()) {
                values.emplace_back(e.get<double>(), 0.0);
            } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
                const double im = e[1].get<double>();
                if (field == Field::Real && im != 0.0)
                    throw ParseError("complex entry in a matrix declared real");
                values.emplace_back(e[0].get<double>(), im);
            } else {
                throw ParseError("entries must be numbers or [re, im] pairs");
            }
        }
    }
    return Matrix(rows, cols, std::move(values), field);
}

std::string matrix_to_csv(const Matrix& m)
{
    if (!m.is_real()) throw InvalidArgument("CSV holds real matrices only");
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) out += ',';
            out += format_double(m(i, j).real());
        }
        out += '\n';
    }
    return out;
}

Matrix matrix_from_csv(std::string_view text)
{
    std::vector<std::vector<double>> rows;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const std::size_t eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
        std::vector<double> row;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            row.push_back(parse_double(line.substr(start, comma - start), line_no));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError("line " + std::to_string(line_no) + " has " + std::to_string(row.size()) +
                             " columns, expected " + std::to_string(rows.front().size()));
        rows.push_back(std::move(row));
    }
    const std::size_t m = rows.size(), n = rows.empty() ? 0 : rows.front().size();
    std::vector<Complex> values;
    values.reserve(m * n);
    for (const auto& row : rows)
        for (double x : row) values.emplace_back(x, 0.0);
    return Matrix(m, n, std::move(values), Field::Real);
}

Matrix load_matrix(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(path.string() + ": " + e.what());
        }
        return matrix_from_json(j);
    }
    return matrix_from_csv(text);
}

void save_matrix(const std::filesystem::path& path, const Matrix& m, Format format)
{
    const std::string text = format == Format::Json ? matrix_to_json(m).dump(2) + "\n" : matrix_to_csv(m);
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw IoError("cannot write " + path.string());
}

Json svd_to_json(const SvdFactors& svd)
{
    return Json{{"U", matrix_to_json(svd.U)}, {"sigma", svd.sigma}, {"V", matrix_to_json(svd.V)}};
}

Json report_to_json(const RolReport& r)
{
    const double tol = r.tolerances.tol;
    Json out;
    out["penrose_class"] = class_json(r.penrose_class);
    out["rol"] = Json{{"holds", r.rol_holds},
                      {"residual", r.rol_residual},
                      {"relative_residual", r.rol_relative},
                      {"tol", tol}};
    out["greville"] = Json{{"range_in_b", check_json(r.greville.range_in_b, tol)},
                           {"range_in_astar", check_json(r.greville.range_in_astar, tol)},
                           {"identity", check_json(r.greville.identity, tol)}};
    out["commute_pAA_BB"] = check_json(r.commute_pAA_BB, tol);
    out["commute_BpB_AA"] = check_json(r.commute_BpB_AA, tol);
    out["proj_test"] = check_json(r.proj_test, tol);
    out["squared_rol"] = check_json(r.squared_rol, tol);
    out["block_form"] = check_json(r.block_form, tol);
    out["angles"] = Json{{"values", r.angles.angles},
                         {"dim_range_astar", r.angles.dim1},
                         {"dim_range_b", r.angles.dim2},
                         {"all_0_or_right", r.angles_0_or_right},
                         {"angle_tol", r.tolerances.angle_tol}};
    out["rank_a"] = r.rank_a;
    out["rank_b"] = r.rank_b;
    out["rank_ab"] = r.rank_ab;
    out["dim_intersection"] = r.dim_intersection;
    out["consistent"] = r.consistent();
    out["tolerances"] = Json{{"tol", tol},
                             {"angle_tol", r.tolerances.angle_tol},
                             {"rank_tol", r.tolerances.rank_tol ? Json(*r.tolerances.rank_tol) : Json(nullptr)}};
    return out;
}

Json twelve_way_to_json(const TwelveWay& twelve, double tol)
{
    Json items = Json::array();
    for (std::size_t i = 0; i < twelve.items.size(); ++i) {
        Json item = check_json(twelve.items[i], tol);
        item["name"] = TwelveWay::names()[i];
        items.push_back(std::move(item));
    }
    return Json{{"verdict", twelve.verdict()}, {"all_agree", twelve.all_agree()}, {"items", items}};
}

Json weak_class_to_json(const WeakClass& w, double tol)
{
    const auto trio = [&](const std::array<Check, 3>& c) {
        return Json{{"range_equals_intersection", check_json(c[0], tol)},
                    {"orthogonal_projection", check_json(c[1], tol)},
                    {"matches_pinv_product", check_json(c[2], tol)}};
    };
    return Json{{"is12", w.is12},         {"is123", w.is123},
                {"is124", w.is124},       {"is1234", w.is1234},
                {"criteria123", trio(w.criteria123)}, {"criteria124", trio(w.criteria124)},
                {"consistent", w.consistent()}};
}

} // namespace rol::io
