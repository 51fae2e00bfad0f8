#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "faceq/image_io.hpp"
#include "faceq/metrics.hpp"
#include "faceq/report.hpp"
#include "faceq/segmentation.hpp"
#include "faceq/sweep.hpp"
#include "faceq/version.hpp"

namespace {

using namespace faceq;

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, ',')) out.push_back(item);
    return out;
}

Rect parse_rect(const std::string& s, const char* flag) {
    const std::vector<std::string> parts = split_list(s);
    if (parts.size() != 4)
        throw std::invalid_argument(std::string(flag) + " expects x,y,w,h");
    try {
        return Rect{std::stoi(parts[0]), std::stoi(parts[1]), std::stoi(parts[2]),
                    std::stoi(parts[3])};
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(flag) + " expects four integers x,y,w,h");
    }
}

std::vector<int> parse_qualities(const std::string& s) {
    std::vector<int> out;
    for (const std::string& p : split_list(s)) {
        try {
            out.push_back(std::stoi(p));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad quality '" + p + "'");
        }
    }
    if (out.empty()) throw std::invalid_argument("quality list is empty");
    return out;
}

std::vector<Metric> parse_metric_list(const std::string& s) {
    std::vector<Metric> out;
    for (const std::string& p : split_list(s)) out.push_back(parse_metric(p));
    if (out.empty()) throw std::invalid_argument("metric list is empty");
    return out;
}

std::vector<Region> parse_region_list(const std::string& s) {
    std::vector<Region> out;
    for (const std::string& p : split_list(s)) out.push_back(parse_region(p));
    if (out.empty()) throw std::invalid_argument("region list is empty");
    return out;
}

// Shared threshold flags for segment and sweep.
struct ThresholdOpts {
    std::string preset = "paper";
    int cr_min = -1, cr_max = -1, cb_min = -1, cb_max = -1;

    void attach(CLI::App* cmd) {
        cmd->add_option("--preset", preset,
                        "threshold preset: paper (Cr 133..173, Cb 77..127) or "
                        "chai (Cr 136..156, Cb 110..123)");
        cmd->add_option("--cr-min", cr_min, "override lower Cr bound");
        cmd->add_option("--cr-max", cr_max, "override upper Cr bound");
        cmd->add_option("--cb-min", cb_min, "override lower Cb bound");
        cmd->add_option("--cb-max", cb_max, "override upper Cb bound");
    }

    SkinThresholds resolve() const {
        SkinThresholds t = threshold_preset(preset);
        if (cr_min >= 0) t.cr_min = cr_min;
        if (cr_max >= 0) t.cr_max = cr_max;
        if (cb_min >= 0) t.cb_min = cb_min;
        if (cb_max >= 0) t.cb_max = cb_max;
        t.validate();
        return t;
    }

    std::string describe() const {
        if (cr_min < 0 && cr_max < 0 && cb_min < 0 && cb_max < 0) return preset;
        const SkinThresholds t = resolve();
        std::ostringstream os;
        os << "cr " << t.cr_min << ".." << t.cr_max << ", cb " << t.cb_min << ".."
           << t.cb_max;
        return os.str();
    }
};

struct MetricOpts {
    int window = 8;
    int stride = 1;
    double k1 = 0.01;
    double k2 = 0.03;

    void attach(CLI::App* cmd) {
        cmd->add_option("--window", window, "window side in pixels (default 8)");
        cmd->add_option("--stride", stride, "window step in pixels (default 1)");
        cmd->add_option("--k1", k1, "luminance stabilizer factor (default 0.01)");
        cmd->add_option("--k2", k2, "contrast stabilizer factor (default 0.03)");
    }

    SsimParams resolve() const {
        SsimParams p;
        p.window = window;
        p.stride = stride;
        p.k1 = k1;
        p.k2 = k2;
        p.validate();
        return p;
    }
};

std::string default_mask_path(const std::string& input) {
    std::filesystem::path p(input);
    std::filesystem::path out = p.parent_path() / (p.stem().string() + "_mask.png");
    return out.string();
}

std::string plot_path_for(const std::string& csv_path) {
    std::filesystem::path p(csv_path);
    p.replace_extension(".dat");
    return p.string();
}

int run_segment(const std::string& input, const ThresholdOpts& topts, bool fill,
                std::string out_path) {
    const RgbImage img = load_image(input);
    const YCrCbImage ycc = rgb_to_ycrcb(img);
    const SkinThresholds t = topts.resolve();

    RegionMask component = largest_component(skin_mask(ycc, t));
    if (fill) component = fill_holes(component);
    const Rect face = face_rect(component); // throws NoRegionError when empty
    const Rect body = body_region(img.width, img.height, face);

    if (out_path.empty()) out_path = default_mask_path(input);
    write_mask_png(component, out_path);

    std::cout << "face=" << face.x0 << ',' << face.y0 << ',' << face.w << ',' << face.h
              << " body=" << body.x0 << ',' << body.y0 << ',' << body.w << ',' << body.h
              << '\n';
    return 0;
}

int run_compare(const std::string& ref_path, const std::string& dist_path,
                const std::string& metrics_arg, const std::string& face_arg,
                const std::string& body_arg, const MetricOpts& mopts) {
    const std::vector<Metric> metrics = parse_metric_list(metrics_arg);
    const SsimParams params = mopts.resolve();

    const RgbImage ref = load_image(ref_path);
    const RgbImage dist = load_image(dist_path);
    if (ref.width != dist.width || ref.height != dist.height)
        throw ShapeError("image sizes differ: " + std::to_string(ref.width) + "x" +
                         std::to_string(ref.height) + " vs " + std::to_string(dist.width) +
                         "x" + std::to_string(dist.height));

    const Plane ref_y = luma_plane(rgb_to_ycrcb(ref));
    const Plane dist_y = luma_plane(rgb_to_ycrcb(dist));

    std::vector<std::pair<Region, Rect>> targets;
    if (!face_arg.empty())
        targets.emplace_back(Region::kFace, parse_rect(face_arg, "--face-rect"));
    if (!body_arg.empty())
        targets.emplace_back(Region::kBody, parse_rect(body_arg, "--body-rect"));
    if (targets.empty())
        targets.emplace_back(Region::kFull, Rect{0, 0, ref.width, ref.height});

    for (const auto& [region, rect] : targets) {
        const Plane a = crop(ref_y, rect);
        const Plane b = crop(dist_y, rect);
        for (Metric m : metrics) {
            double value = 0.0;
            switch (m) {
                case Metric::kQ: value = uiqi(a, b, params).score; break;
                case Metric::kSsim: value = ssim(a, b, params).score; break;
                case Metric::kGssim: value = gssim(a, b, params).score; break;
            }
            std::cout << to_string(region) << ' ' << to_string(m) << ' '
                      << format_score(value) << '\n';
        }
    }
    return 0;
}

int run_sweep_cmd(const std::string& input, const std::string& out_csv,
                  const std::string& qualities_arg, const std::string& metrics_arg,
                  const std::string& regions_arg, const std::string& face_arg,
                  const std::string& body_arg, const ThresholdOpts& topts, bool fill,
                  const MetricOpts& mopts) {
    SweepConfig cfg;
    if (!qualities_arg.empty()) cfg.qualities = parse_qualities(qualities_arg);
    if (!metrics_arg.empty()) cfg.metrics = parse_metric_list(metrics_arg);
    if (!regions_arg.empty()) cfg.regions = parse_region_list(regions_arg);
    if (!face_arg.empty()) cfg.face_rect = parse_rect(face_arg, "--face-rect");
    if (!body_arg.empty()) cfg.body_rect = parse_rect(body_arg, "--body-rect");
    cfg.thresholds = topts.resolve();
    cfg.fill_holes = fill;
    cfg.params = mopts.resolve();

    const RgbImage img = load_image(input);
    const SweepTable table = run_sweep(img, cfg);

    {
        std::ofstream os(out_csv, std::ios::binary);
        if (!os) throw IoError("cannot open '" + out_csv + "' for writing");
        write_csv(table, os);
        if (!os) throw IoError("failed writing '" + out_csv + "'");
    }

    ReportRecord rec;
    rec.header.tool_version = kVersion;
    rec.header.image_path = input;
    rec.header.codec = codec_id();
    rec.header.thresholds = topts.describe();
    rec.header.params = mopts.resolve();
    rec.table = table;

    const std::string plot_path = plot_path_for(out_csv);
    {
        std::ofstream os(plot_path, std::ios::binary);
        if (!os) throw IoError("cannot open '" + plot_path + "' for writing");
        write_plot_data(rec, os);
        if (!os) throw IoError("failed writing '" + plot_path + "'");
    }

    std::cout << "image: " << input << '\n';
    std::cout << "codec: " << rec.header.codec << '\n';
    std::cout << "thresholds: " << rec.header.thresholds << '\n';
    std::cout << "rows: " << table.rows.size() << '\n';
    std::cout << "csv: " << out_csv << '\n';
    std::cout << "plot: " << plot_path << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"face-weighted JPEG quality analysis"};
    app.set_version_flag("--version", std::string("faceq ") + faceq::kVersion);
    app.require_subcommand(1);

    // segment
    auto* seg = app.add_subcommand("segment", "detect the face/body regions of an image");
    std::string seg_input;
    std::string seg_out;
    bool seg_fill = false;
    ThresholdOpts seg_topts;
    seg->add_option("input", seg_input, "image to segment")->required();
    seg->add_option("--out", seg_out, "mask output path (default: <input>_mask.png)");
    seg->add_flag("--fill-holes", seg_fill, "fill enclosed holes in the face component");
    seg_topts.attach(seg);

    // compare
    auto* cmp = app.add_subcommand("compare", "score a distorted image against a reference");
    std::string cmp_ref, cmp_dist;
    std::string cmp_metrics = "Q,SSIM,GSSIM";
    std::string cmp_face, cmp_body;
    MetricOpts cmp_mopts;
    cmp->add_option("reference", cmp_ref, "reference image")->required();
    cmp->add_option("distorted", cmp_dist, "distorted image")->required();
    cmp->add_option("--metrics", cmp_metrics, "comma list of Q,SSIM,GSSIM (default all)");
    cmp->add_option("--face-rect", cmp_face, "face rectangle x,y,w,h");
    cmp->add_option("--body-rect", cmp_body, "body rectangle x,y,w,h");
    cmp_mopts.attach(cmp);

    // sweep
    auto* swp = app.add_subcommand("sweep", "JPEG quality sweep with per-region scores");
    std::string swp_input, swp_out;
    std::string swp_qualities, swp_metrics, swp_regions;
    std::string swp_face, swp_body;
    bool swp_fill = false;
    ThresholdOpts swp_topts;
    MetricOpts swp_mopts;
    swp->add_option("input", swp_input, "image to degrade and score")->required();
    swp->add_option("--out", swp_out, "CSV output path (plot data lands next to it)")
        ->required();
    swp->add_option("--qualities", swp_qualities,
                    "comma list of JPEG qualities (default 10,20,...,100)");
    swp->add_option("--metrics", swp_metrics, "comma list of Q,SSIM,GSSIM (default all)");
    swp->add_option("--regions", swp_regions,
                    "comma list of face,body,full (default face,body)");
    swp->add_option("--face-rect", swp_face, "explicit face rectangle x,y,w,h");
    swp->add_option("--body-rect", swp_body, "explicit body rectangle x,y,w,h");
    swp->add_flag("--fill-holes", swp_fill, "fill enclosed holes in the face component");
    swp_topts.attach(swp);
    swp_mopts.attach(swp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (seg->parsed()) return run_segment(seg_input, seg_topts, seg_fill, seg_out);
        if (cmp->parsed())
            return run_compare(cmp_ref, cmp_dist, cmp_metrics, cmp_face, cmp_body,
                               cmp_mopts);
        return run_sweep_cmd(swp_input, swp_out, swp_qualities, swp_metrics, swp_regions,
                             swp_face, swp_body, swp_topts, swp_fill, swp_mopts);
    } catch (const faceq::NoRegionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const faceq::ShapeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const faceq::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
