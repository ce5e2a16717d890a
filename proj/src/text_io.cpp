#include "trimap/text_io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "trimap/error.hpp"

namespace trimap {

namespace {

std::vector<std::string> split_fields(std::string_view text)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty())
                out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty())
        out.push_back(std::move(cur));
    return out;
}

Rational json_entry(const nlohmann::json& j)
{
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    if (j.is_string())
        return Rational::parse(j.get<std::string>());
    throw Error(ErrorCode::ParseError, "matrix entries must be integers or rational strings");
}

const char* yes_no(bool b)
{
    return b ? "true" : "false";
}

}  // namespace

Vec3Q parse_shape(std::string_view text)
{
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        const auto comma = text.find(',', start);
        parts.emplace_back(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    if (parts.size() != 3)
        throw Error(ErrorCode::ParseError, "shape needs three comma-separated rationals: '" + std::string(text) + "'");
    return Vec3Q(Rational::parse(parts[0]), Rational::parse(parts[1]), Rational::parse(parts[2]));
}

Mat3Q parse_matrix(std::string_view text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw Error(ErrorCode::ParseError, e.what());
        }
        const auto it = doc.find("matrix");
        if (it == doc.end() || !it->is_array() || it->size() != 3)
            throw Error(ErrorCode::ParseError, "expected \"matrix\": [[..],[..],[..]]");
        Mat3Q m;
        for (std::size_t r = 0; r < 3; ++r) {
            const auto& row = (*it)[r];
            if (!row.is_array() || row.size() != 3)
                throw Error(ErrorCode::ParseError, "each matrix row needs three entries");
            for (std::size_t c = 0; c < 3; ++c)
                m(r, c) = json_entry(row[c]);
        }
        return m;
    }

    const auto fields = split_fields(text);
    if (fields.size() != 9)
        throw Error(ErrorCode::ParseError, "matrix needs nine entries, got " + std::to_string(fields.size()));
    Mat3Q m;
    for (std::size_t i = 0; i < 9; ++i)
        m(i / 3, i % 3) = Rational::parse(fields[i]);
    return m;
}

std::string format_partition(const MarkovPartition& mp)
{
    std::ostringstream os;
    os << "cells=" << mp.size() << '\n';
    for (const auto& cell : mp.cells()) {
        os << "cell " << cell.index << " unfold=" << cell.unfold.word_str() << '\n';
        for (const auto& v : cell.vertices)
            os << "  " << v.str() << '\n';
    }
    return os.str();
}

std::string partition_to_json(const MarkovPartition& mp)
{
    nlohmann::json doc;
    doc["matrix"] = mp.atm().matrix.str();
    doc["kind"] = kind_str(mp.atm().kind);
    doc["abs_det"] = mp.atm().abs_det.str();
    auto& cells = doc["cells"] = nlohmann::json::array();
    for (const auto& cell : mp.cells()) {
        nlohmann::json c;
        c["index"] = cell.index;
        c["unfold"] = cell.unfold.word_str();
        c["unfold_matrix"] = cell.unfold.matrix().str();
        for (const auto& v : cell.vertices)
            c["vertices"].push_back(v.str());
        cells.push_back(std::move(c));
    }
    return doc.dump(2) + "\n";
}

std::string format_itinerary(const Itinerary& it, std::size_t alphabet)
{
    std::string out;
    const bool compact = alphabet <= 10;
    for (std::size_t i = 0; i < it.symbols.size(); ++i) {
        if (!compact && i)
            out += ' ';
        out += std::to_string(it.symbols[i]);
    }
    if (!it.boundary_steps.empty()) {
        out += " boundary=";
        for (std::size_t i = 0; i < it.boundary_steps.size(); ++i) {
            if (i)
                out += ',';
            out += std::to_string(it.boundary_steps[i]);
        }
    }
    return out;
}

std::string format_orbit(const OrbitRecord& rec)
{
    std::ostringstream os;
    std::size_t n = 0;
    for (const auto& p : rec.transient)
        os << n++ << ' ' << p.str() << '\n';
    for (const auto& p : rec.cycle)
        os << n++ << ' ' << p.str() << '\n';
    os << "preperiod=" << rec.preperiod << " period=" << rec.period << " flat=" << yes_no(rec.hit_flat)
       << " right=" << yes_no(rec.hit_right) << '\n';
    return os.str();
}

std::string format_decomposition(const HofstadterDecomposition& d)
{
    std::ostringstream os;
    os << "r=" << d.r1 << ',' << d.r2 << ',' << d.r3 << " antipedal=" << yes_no(d.uses_antipedal) << '\n';
    for (const auto& f : d.factors)
        os << f.str() << '\n';
    return os.str();
}

}  // namespace trimap
