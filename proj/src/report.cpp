#include "faceq/report.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <locale>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

namespace faceq {

std::string format_score(double v) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::fixed << std::setprecision(9) << v;
    return os.str();
}

void write_csv(const SweepTable& t, std::ostream& os) {
    os << "quality,region,metric,value\n";
    for (const SweepRow& r : t.rows) {
        os << r.quality << ',' << to_string(r.region) << ',' << to_string(r.metric)
           << ',' << format_score(r.value) << '\n';
    }
}

std::string csv_string(const SweepTable& t) {
    std::ostringstream os;
    write_csv(t, os);
    return os.str();
}

namespace {

int parse_int_field(const std::string& s, const char* what) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw Error(std::string("csv: bad ") + what + " field '" + s + "'");
    return v;
}

double parse_value_field(const std::string& s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw Error("csv: bad value field '" + s + "'");
    return v;
}

} // namespace

SweepTable read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line))
        throw Error("csv: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "quality,region,metric,value")
        throw Error("csv: unexpected header '" + line + "'");

    SweepTable t;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        std::string fields[4];
        std::size_t start = 0;
        int nfields = 0;
        for (std::size_t i = 0; i <= line.size(); ++i) {
            if (i == line.size() || line[i] == ',') {
                if (nfields == 4)
                    throw Error("csv: too many fields in '" + line + "'");
                fields[nfields++] = line.substr(start, i - start);
                start = i + 1;
            }
        }
        if (nfields != 4)
            throw Error("csv: expected 4 fields in '" + line + "'");

        SweepRow r;
        r.quality = parse_int_field(fields[0], "quality");
        try {
            r.region = parse_region(fields[1]);
            r.metric = parse_metric(fields[2]);
        } catch (const std::invalid_argument& e) {
            throw Error(std::string("csv: ") + e.what());
        }
        r.value = parse_value_field(fields[3]);
        t.rows.push_back(r);
    }
    return t;
}

void write_plot_data(const ReportRecord& rec, std::ostream& os) {
    const ReportHeader& h = rec.header;
    if (h.tool_version.empty() || h.image_path.empty() || h.codec.empty() ||
        h.thresholds.empty())
        throw Error("report header incomplete");

    std::vector<int> qualities;
    std::vector<Region> regions;
    std::vector<Metric> metrics;
    std::map<std::tuple<int, Region, Metric>, double> cells;
    for (const SweepRow& r : rec.table.rows) {
        if (!cells.emplace(std::make_tuple(r.quality, r.region, r.metric), r.value).second)
            throw Error("sweep table has duplicate rows");
        qualities.push_back(r.quality);
        regions.push_back(r.region);
        metrics.push_back(r.metric);
    }
    auto dedupe = [](auto& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    dedupe(qualities);
    dedupe(regions);
    dedupe(metrics);
    if (qualities.empty())
        throw Error("sweep table is empty");

    std::ostringstream params;
    params.imbue(std::locale::classic());
    params << "window: " << h.params.window << "  stride: " << h.params.stride
           << "  k1: " << h.params.k1 << "  k2: " << h.params.k2
           << "  range: " << h.params.dynamic_range();

    os << "# faceq " << h.tool_version << '\n';
    os << "# image: " << h.image_path << '\n';
    os << "# codec: " << h.codec << '\n';
    os << "# thresholds: " << h.thresholds << '\n';
    os << "# " << params.str() << '\n';

    for (std::size_t mi = 0; mi < metrics.size(); ++mi) {
        // Two blank lines so each metric is addressable as a gnuplot index.
        os << '\n' << '\n';
        os << "# metric: " << to_string(metrics[mi]) << '\n';
        os << "# quality";
        for (Region r : regions) os << ' ' << to_string(r);
        os << '\n';
        for (int q : qualities) {
            os << q;
            for (Region r : regions) {
                const auto it = cells.find(std::make_tuple(q, r, metrics[mi]));
                if (it == cells.end())
                    throw Error("sweep table is ragged: missing " + std::to_string(q) +
                                "/" + to_string(r) + "/" + to_string(metrics[mi]));
                os << ' ' << format_score(it->second);
            }
            os << '\n';
        }
    }
}

void write_mask_png(const RegionMask& m, const std::string& path) {
    if (m.width <= 0 || m.height <= 0)
        throw ShapeError("cannot write an empty mask");

    cv::Mat img(m.height, m.width, CV_8UC1);
    for (int y = 0; y < m.height; ++y) {
        uchar* row = img.ptr<uchar>(y);
        for (int x = 0; x < m.width; ++x) row[x] = m.at(x, y) ? 255 : 0;
    }
    const std::vector<int> opts = {cv::IMWRITE_PNG_BILEVEL, 1};
    bool ok = false;
    try {
        ok = cv::imwrite(path, img, opts);
    } catch (const cv::Exception& e) {
        throw IoError("cannot write mask to '" + path + "': " + e.what());
    }
    if (!ok)
        throw IoError("cannot write mask to '" + path + "'");
}

} // namespace faceq
