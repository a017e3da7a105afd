#include "tbp/annotation.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "tbp/error.hpp"

namespace tbp::annotation {

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t begin = 0;
  while (true) {
    const auto pos = line.find(sep, begin);
    out.push_back(line.substr(begin, pos == std::string_view::npos ? pos : pos - begin));
    if (pos == std::string_view::npos) break;
    begin = pos + 1;
  }
  return out;
}

std::size_t parse_position(std::string_view field, const char* what, std::size_t line_no) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size() || value < 1) {
    throw InputFormatError("line " + std::to_string(line_no) + ": " + what +
                           " must be a positive integer, got '" + std::string(field) + "'");
  }
  return value;
}

struct Located {
  Interval interval;
  std::size_t line = 0;
};

}  // namespace

std::vector<AnnotationRecord> parse(std::istream& in) {
  std::map<std::string, std::vector<Located>> grouped;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split(line, '\t');
    if (fields.size() != 3) {
      throw InputFormatError("line " + std::to_string(line_no) +
                             ": expected 3 tab-separated fields (id, start, end), got " +
                             std::to_string(fields.size()));
    }
    if (fields[0].empty()) throw InputFormatError("line " + std::to_string(line_no) + ": empty id");
    const auto start = parse_position(fields[1], "start", line_no);
    const auto end = parse_position(fields[2], "end", line_no);
    if (start > end) throw InputFormatError("start > end at line " + std::to_string(line_no));
    grouped[std::string(fields[0])].push_back({{start, end}, line_no});
  }

  std::vector<AnnotationRecord> out;
  for (auto& [id, intervals] : grouped) {
    std::stable_sort(intervals.begin(), intervals.end(), [](const Located& a, const Located& b) {
      return a.interval.start < b.interval.start;
    });
    AnnotationRecord rec{id, {}};
    for (std::size_t i = 0; i < intervals.size(); ++i) {
      if (i > 0 && intervals[i].interval.start <= intervals[i - 1].interval.end) {
        const auto& a = intervals[i - 1];
        const auto& b = intervals[i];
        throw InputFormatError("overlapping exons for '" + id + "': line " +
                               std::to_string(a.line) + " [" + std::to_string(a.interval.start) +
                               "," + std::to_string(a.interval.end) + "] and line " +
                               std::to_string(b.line) + " [" + std::to_string(b.interval.start) +
                               "," + std::to_string(b.interval.end) + "]");
      }
      rec.exons.push_back(intervals[i].interval);
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<AnnotationRecord> parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse(in);
}

void write(std::ostream& out, const AnnotationRecord& rec) {
  for (const Interval& e : rec.exons) out << rec.id << '\t' << e.start << '\t' << e.end << '\n';
}

SegmentList to_segments(const AnnotationRecord& rec, std::size_t sequence_length) {
  std::vector<Segment> segments;
  std::size_t next = 1;
  for (const Interval& e : rec.exons) {
    if (e.end > sequence_length) {
      throw InputFormatError("exon [" + std::to_string(e.start) + "," + std::to_string(e.end) +
                             "] of '" + rec.id + "' exceeds sequence length " +
                             std::to_string(sequence_length));
    }
    if (e.start > next) segments.push_back({next, e.start - 1, Label::Intron});
    segments.push_back({e.start, e.end, Label::Exon});
    next = e.end + 1;
  }
  if (next <= sequence_length) segments.push_back({next, sequence_length, Label::Intron});
  return SegmentList(std::move(segments), sequence_length);
}

std::vector<std::pair<std::string, SegmentList>> parse_segments_csv(std::istream& in) {
  std::map<std::string, std::vector<Segment>> grouped;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line_no == 1) {
      if (line != "id,start,end,label") {
        throw InputFormatError("segments file must start with header 'id,start,end,label'");
      }
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() != 4) {
      throw InputFormatError("line " + std::to_string(line_no) + ": expected 4 fields");
    }
    Label label;
    try {
      label = label_from_string(fields[3]);
    } catch (const InputFormatError& e) {
      throw InputFormatError("line " + std::to_string(line_no) + ": " + e.what());
    }
    grouped[std::string(fields[0])].push_back({parse_position(fields[1], "start", line_no),
                                               parse_position(fields[2], "end", line_no), label});
  }
  std::vector<std::pair<std::string, SegmentList>> out;
  for (auto& [id, segments] : grouped) {
    std::sort(segments.begin(), segments.end(),
              [](const Segment& a, const Segment& b) { return a.start < b.start; });
    const std::size_t n = segments.back().end;
    try {
      out.emplace_back(id, SegmentList(std::move(segments), n));
    } catch (const UsageError& e) {
      throw InputFormatError("segments for '" + id + "': " + e.what());
    }
  }
  if (out.empty()) throw InputFormatError("segments file contains no segments");
  return out;
}

}  // namespace tbp::annotation
