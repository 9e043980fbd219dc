#include "metafor/core/expand.hpp"
#include "metafor/util/csv.hpp"
#include "metafor/util/errors.hpp"

#include <algorithm>

namespace metafor::core {

std::string make_segment_id(const std::string& source_id, SplitKind kind, int horizon) {
    return source_id + "/" + split_kind_name(kind) + "/h" + std::to_string(horizon);
}

namespace {

void emit_segments(const TimeSeries& source, std::size_t offset, std::size_t len, SplitKind kind,
                   std::vector<SegmentMeta>& out) {
    (void)offset;
    for (int h : eligible_horizons(len, source.frequency)) {
        SegmentMeta m;
        m.segment_id = make_segment_id(source.id, kind, h);
        m.source_id = source.id;
        m.split_kind = kind;
        m.frequency = source.frequency;
        m.horizon = h;
        m.train_len = len - static_cast<std::size_t>(h);
        out.push_back(std::move(m));
    }
}

} // namespace

std::vector<SegmentMeta> expand_initial(const std::vector<TimeSeries>& series) {
    std::vector<SegmentMeta> out;
    for (const auto& s : series) emit_segments(s, 0, s.size(), SplitKind::Full, out);
    return out;
}

std::vector<SegmentMeta> expand_augmented(const std::vector<TimeSeries>& series) {
    std::vector<SegmentMeta> out;
    for (const auto& s : series) {
        emit_segments(s, 0, s.size(), SplitKind::Full, out);
        const std::size_t m = s.size() / 2;
        emit_segments(s, 0, m, SplitKind::OlderHalf, out);
        emit_segments(s, m, s.size() - m, SplitKind::NewerHalf, out);
    }
    return out;
}

Segment materialize(const SegmentMeta& meta, const TimeSeries& source) {
    if (source.id != meta.source_id) throw util::DataError("segment/source mismatch: " + meta.segment_id);
    std::size_t begin = 0;
    std::size_t len = source.size();
    const std::size_t m = source.size() / 2;
    if (meta.split_kind == SplitKind::OlderHalf) {
        begin = 0;
        len = m;
    } else if (meta.split_kind == SplitKind::NewerHalf) {
        begin = m;
        len = source.size() - m;
    }
    const std::size_t h = static_cast<std::size_t>(meta.horizon);
    if (meta.train_len + h != len) throw util::DataError("segment " + meta.segment_id + " does not fit its source");

    Segment seg;
    seg.segment_id = meta.segment_id;
    seg.source_id = meta.source_id;
    seg.split_kind = meta.split_kind;
    seg.horizon = meta.horizon;
    seg.train.id = meta.segment_id;
    seg.train.frequency = meta.frequency;
    seg.train.values.assign(source.values.begin() + begin, source.values.begin() + begin + meta.train_len);
    seg.test.assign(source.values.begin() + begin + meta.train_len, source.values.begin() + begin + len);
    return seg;
}

std::string segments_to_csv(const std::vector<SegmentMeta>& segments) {
    std::string out = "segment_id,source_id,split_kind,frequency,horizon,train_len\n";
    for (const auto& m : segments) {
        out += m.segment_id;
        out += ',';
        out += m.source_id;
        out += ',';
        out += split_kind_name(m.split_kind);
        out += ',';
        out += frequency_name(m.frequency);
        out += ',';
        out += std::to_string(m.horizon);
        out += ',';
        out += std::to_string(m.train_len);
        out += '\n';
    }
    return out;
}

std::vector<SegmentMeta> segments_from_csv(const std::string& text) {
    std::vector<SegmentMeta> out;
    std::size_t pos = 0;
    bool header = true;
    while (pos < text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string::npos) nl = text.size();
        std::string line = text.substr(pos, nl - pos);
        pos = nl + 1;
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        auto cells = util::split_csv_line(line);
        if (cells.size() != 6) throw util::DataError("bad segments row: " + line);
        SegmentMeta m;
        m.segment_id = cells[0];
        m.source_id = cells[1];
        m.split_kind = split_kind_from_name(cells[2]);
        m.frequency = frequency_from_name(cells[3]);
        m.horizon = std::stoi(cells[4]);
        m.train_len = static_cast<std::size_t>(std::stoul(cells[5]));
        out.push_back(std::move(m));
    }
    return out;
}

} // namespace metafor::core
