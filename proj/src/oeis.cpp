#include "tribokit/oeis.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace tribokit::oeis {

BFileError::BFileError(Kind kind, std::size_t line, const std::string& message)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message),
      kind_(kind),
      line_(line) {}

bool is_valid_id(std::string_view id) {
    return id.size() == 7 && id[0] == 'A' &&
           std::all_of(id.begin() + 1, id.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string bfile_name(std::string_view id) {
    if (!is_valid_id(id)) throw std::invalid_argument("not an OEIS id: " + std::string(id));
    return "b" + std::string(id.substr(1)) + ".txt";
}

std::string_view sequence_id(SequenceKind kind) {
    switch (kind) {
        case SequenceKind::Tribonacci: return "A000073";
        case SequenceKind::GeneralizedLucas: return "A001644";
        case SequenceKind::MinorSum: return "A073145";
    }
    return "";
}

Index index_shift(std::string_view id) { return id == "A000073" ? -1 : 0; }

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        const std::size_t start = i;
        while (i < line.size() && !is_space(line[i])) ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

bool is_integer_token(std::string_view tok) {
    std::size_t i = (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) ? 1 : 0;
    if (i == tok.size()) return false;
    return std::all_of(tok.begin() + static_cast<std::ptrdiff_t>(i), tok.end(),
                       [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

BFile parse_bfile(std::string_view text, std::string sequence_id) {
    using Kind = BFileError::Kind;
    if (!is_valid_id(sequence_id)) {
        throw BFileError(Kind::Structural, 0, "not an OEIS id: " + sequence_id);
    }
    BFile out{std::move(sequence_id), {}};
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        const auto tokens = split_tokens(line);
        if (tokens.empty() || tokens[0].front() == '#') continue;
        if (tokens.size() != 2 || !is_integer_token(tokens[0]) || !is_integer_token(tokens[1])) {
            throw BFileError(Kind::Malformed, line_no,
                             "expected two integers, got \"" + std::string(line) + "\"");
        }
        std::string_view idx_tok = tokens[0];
        if (idx_tok.front() == '+') idx_tok.remove_prefix(1);
        Index index = 0;
        const auto [ptr, ec] = std::from_chars(idx_tok.data(), idx_tok.data() + idx_tok.size(), index);
        if (ec != std::errc{} || ptr != idx_tok.data() + idx_tok.size()) {
            throw BFileError(Kind::Malformed, line_no, "index out of range");
        }
        std::string_view val_tok = tokens[1];
        if (val_tok.front() == '+') val_tok.remove_prefix(1);
        Integer value(std::string(val_tok), 10);

        if (!out.rows.empty() && index <= out.rows.back().index) {
            throw BFileError(Kind::Structural, line_no,
                             "index " + std::to_string(index) + " does not increase");
        }
        out.rows.push_back({index, std::move(value)});
    }
    if (out.rows.empty()) {
        throw BFileError(Kind::Structural, 0, "b-file for " + out.sequence_id + " has no data rows");
    }
    return out;
}

std::string format_bfile(SequenceKind kind, Index lo, Index hi) {
    if (lo < 0) throw std::domain_error("b-file output starts at a non-negative index");
    std::ostringstream os;
    for (const auto& t : sequence_range(kind, lo, hi)) os << t.index << ' ' << t.value << '\n';
    return os.str();
}

CrosscheckReport crosscheck(SequenceKind kind, const BFile& bfile, std::size_t max_rows) {
    CrosscheckReport report{bfile.sequence_id, index_shift(bfile.sequence_id), 0, {}};
    const std::size_t count = std::min(max_rows, bfile.rows.size());
    if (count == 0) return report;

    const Index first = bfile.rows.front().index + report.offset_used;
    const Index last = bfile.rows[count - 1].index + report.offset_used;
    const auto local = sequence_range(kind, first, last);
    for (std::size_t i = 0; i < count; ++i) {
        const Row& row = bfile.rows[i];
        const auto slot = static_cast<std::size_t>(row.index + report.offset_used - first);
        if (local[slot].value != row.value) {
            report.mismatches.push_back({row.index, local[slot].value, row.value});
        }
    }
    report.rows_compared = count;
    return report;
}

BFile fetch_bfile(std::string_view sequence_id, const Transport& transport) {
    if (!is_valid_id(sequence_id)) {
        throw FetchError("not an OEIS id: " + std::string(sequence_id));
    }
    std::string text;
    try {
        text = transport(sequence_id);
    } catch (const std::exception& e) {
        throw FetchError("fetching " + std::string(sequence_id) + ": " + e.what());
    }
    return parse_bfile(text, std::string(sequence_id));
}

}  // namespace tribokit::oeis
