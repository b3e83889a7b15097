#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>
#include <sstream>

#include "skinmask/classifier.hpp"
#include "skinmask/cli.hpp"
#include "skinmask/color.hpp"
#include "skinmask/error.hpp"
#include "skinmask/evaluation.hpp"
#include "skinmask/image.hpp"
#include "skinmask/threshold_config.hpp"

namespace py = pybind11;
using namespace skinmask;

namespace {

using U8Array = py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>;
using BoolArray = py::array_t<bool, py::array::c_style | py::array::forcecast>;

// Accepts H x W x 3 (opaque) or H x W x 4 uint8 arrays.
ImageBuffer image_from_array(const U8Array& arr) {
  if (arr.ndim() != 3 || (arr.shape(2) != 3 && arr.shape(2) != 4)) {
    throw py::value_error("expected an H x W x 3 or H x W x 4 uint8 array");
  }
  const auto h = static_cast<std::size_t>(arr.shape(0));
  const auto w = static_cast<std::size_t>(arr.shape(1));
  const auto c = static_cast<std::size_t>(arr.shape(2));
  std::vector<Rgba> pixels(w * h);
  const std::uint8_t* src = arr.data();
  for (std::size_t i = 0; i < pixels.size(); ++i, src += c) {
    pixels[i] = Rgba{src[0], src[1], src[2], c == 4 ? src[3] : std::uint8_t{255}};
  }
  return ImageBuffer(w, h, std::move(pixels));
}

U8Array array_from_image(const ImageBuffer& img) {
  U8Array out({img.height(), img.width(), std::size_t{4}});
  std::memcpy(out.mutable_data(), img.pixels().data(), img.pixels().size_bytes());
  return out;
}

Mask mask_from_array(const BoolArray& arr) {
  if (arr.ndim() != 2) throw py::value_error("expected an H x W boolean array");
  const auto h = static_cast<std::size_t>(arr.shape(0));
  const auto w = static_cast<std::size_t>(arr.shape(1));
  std::vector<std::uint8_t> bits(arr.data(), arr.data() + w * h);
  return Mask(w, h, std::move(bits));
}

BoolArray array_from_mask(const Mask& m) {
  BoolArray out({m.height(), m.width()});
  bool* dst = out.mutable_data();
  for (std::size_t i = 0; i < m.size(); ++i) dst[i] = m[i];
  return out;
}

Rgba make_rgba(int r, int g, int b, int a) {
  for (int v : {r, g, b, a}) {
    if (v < 0 || v > 255) throw py::value_error("channel values must lie in [0, 255]");
  }
  return Rgba{static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(g), static_cast<std::uint8_t>(b),
              static_cast<std::uint8_t>(a)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Skin detection core: colour conversions, threshold rule, evaluation";

  static py::exception<Error> error(m, "SkinmaskError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error(("[" + std::string(to_string(e.code())) + "] " + e.what()).c_str());
    }
  });

  py::enum_<YCbCrMode>(m, "YCbCrMode")
      .value("DIGITAL", YCbCrMode::kDigital)
      .value("LITERAL", YCbCrMode::kLiteral);

  py::class_<Rgba>(m, "Rgba")
      .def(py::init(&make_rgba), py::arg("r"), py::arg("g"), py::arg("b"), py::arg("a") = 255)
      .def_readwrite("r", &Rgba::r)
      .def_readwrite("g", &Rgba::g)
      .def_readwrite("b", &Rgba::b)
      .def_readwrite("a", &Rgba::a)
      .def("__eq__", [](const Rgba& x, const Rgba& y) { return x == y; })
      .def("__repr__", [](const Rgba& p) {
        std::ostringstream s;
        s << "Rgba(" << int{p.r} << ", " << int{p.g} << ", " << int{p.b} << ", " << int{p.a} << ")";
        return s.str();
      });

  py::class_<NormalizedRgb>(m, "NormalizedRgb")
      .def_readonly("rn", &NormalizedRgb::rn)
      .def_readonly("gn", &NormalizedRgb::gn)
      .def_readonly("bn", &NormalizedRgb::bn);

  py::class_<Hsv>(m, "Hsv")
      .def(py::init([](double h, double s, double v) { return Hsv{h, s, v}; }), py::arg("h"), py::arg("s"),
           py::arg("v"))
      .def_readonly("h", &Hsv::h)
      .def_readonly("s", &Hsv::s)
      .def_readonly("v", &Hsv::v);

  py::class_<YCbCr>(m, "YCbCr")
      .def(py::init([](double y, double cb, double cr, YCbCrMode mode) { return YCbCr{y, cb, cr, mode}; }),
           py::arg("y"), py::arg("cb"), py::arg("cr"), py::arg("mode") = YCbCrMode::kDigital)
      .def_readonly("y", &YCbCr::y)
      .def_readonly("cb", &YCbCr::cb)
      .def_readonly("cr", &YCbCr::cr)
      .def_readonly("mode", &YCbCr::mode);

  py::class_<ThresholdConfig>(m, "ThresholdConfig")
      .def(py::init<>())
      .def_static(
          "from_json", [](const std::string& text) { return nlohmann::json::parse(text).get<ThresholdConfig>(); },
          py::arg("text"))
      .def("to_json", [](const ThresholdConfig& c) { return nlohmann::json(c).dump(); })
      .def_readwrite("h_min", &ThresholdConfig::h_min)
      .def_readwrite("h_max", &ThresholdConfig::h_max)
      .def_readwrite("s_min", &ThresholdConfig::s_min)
      .def_readwrite("s_max", &ThresholdConfig::s_max)
      .def_readwrite("r_min", &ThresholdConfig::r_min)
      .def_readwrite("g_min", &ThresholdConfig::g_min)
      .def_readwrite("b_min", &ThresholdConfig::b_min)
      .def_readwrite("rg_gap_min", &ThresholdConfig::rg_gap_min)
      .def_readwrite("a_min", &ThresholdConfig::a_min)
      .def_readwrite("y_min", &ThresholdConfig::y_min)
      .def_readwrite("cr_min", &ThresholdConfig::cr_min)
      .def_readwrite("cb_min", &ThresholdConfig::cb_min)
      .def_readwrite("ycbcr_mode", &ThresholdConfig::ycbcr_mode);

  py::class_<SkinDecision>(m, "SkinDecision")
      .def_readonly("is_skin", &SkinDecision::is_skin)
      .def_readonly("rgb_pass", &SkinDecision::rgb_pass)
      .def_readonly("hsv_pass", &SkinDecision::hsv_pass)
      .def_readonly("ycbcr_pass", &SkinDecision::ycbcr_pass);

  py::class_<ClassificationStats>(m, "ClassificationStats")
      .def_readonly("total_pixels", &ClassificationStats::total_pixels)
      .def_readonly("skin_pixels", &ClassificationStats::skin_pixels)
      .def_readonly("rgb_pass_count", &ClassificationStats::rgb_pass_count)
      .def_readonly("hsv_pass_count", &ClassificationStats::hsv_pass_count)
      .def_readonly("ycbcr_pass_count", &ClassificationStats::ycbcr_pass_count);

  py::class_<ConfusionMatrix>(m, "ConfusionMatrix")
      .def(py::init([](std::uint64_t tp, std::uint64_t fp, std::uint64_t tn, std::uint64_t fn) {
             return ConfusionMatrix{tp, fp, tn, fn};
           }),
           py::arg("tp"), py::arg("fp"), py::arg("tn"), py::arg("fn"))
      .def_readonly("tp", &ConfusionMatrix::tp)
      .def_readonly("fp", &ConfusionMatrix::fp)
      .def_readonly("tn", &ConfusionMatrix::tn)
      .def_readonly("fn", &ConfusionMatrix::fn)
      .def("total", &ConfusionMatrix::total);

  m.def("unpack_argb", &unpack_argb, py::arg("packed"));
  m.def("pack_argb", &pack_argb, py::arg("pixel"));
  m.def("normalize_rgb", &normalize_rgb, py::arg("pixel"));
  m.def("rgb_to_hsv", &rgb_to_hsv, py::arg("pixel"));
  m.def("rgb_to_ycbcr", &rgb_to_ycbcr, py::arg("pixel"), py::arg("mode") = YCbCrMode::kDigital);

  m.def("rgb_rule", &rgb_rule, py::arg("pixel"), py::arg("config") = ThresholdConfig{});
  m.def("hsv_rule", &hsv_rule, py::arg("hsv"), py::arg("config") = ThresholdConfig{});
  m.def("ycbcr_rule", &ycbcr_rule, py::arg("ycbcr"), py::arg("config") = ThresholdConfig{});
  m.def("classify_pixel", &classify_pixel, py::arg("pixel"), py::arg("config") = ThresholdConfig{});

  m.def(
      "classify_image",
      [](const U8Array& arr, const ThresholdConfig& cfg, std::size_t workers) {
        const ImageBuffer img = image_from_array(arr);
        Classification result;
        {
          py::gil_scoped_release release;
          result = classify_image(img, cfg, workers);
        }
        return py::make_tuple(array_from_mask(result.mask), result.stats);
      },
      py::arg("image"), py::arg("config") = ThresholdConfig{}, py::arg("workers") = 1,
      "Classify an H x W x 3|4 uint8 array; returns (bool mask, ClassificationStats).");

  m.def("load_image", [](const std::string& path) { return array_from_image(load_image(path)); }, py::arg("path"),
        "Decode a PNG or JPEG into an H x W x 4 uint8 array.");
  m.def("write_mask", [](const BoolArray& mask, const std::string& path) { write_mask(mask_from_array(mask), path); },
        py::arg("mask"), py::arg("path"));
  m.def(
      "binarize_ground_truth",
      [](const U8Array& arr, double threshold) {
        return array_from_mask(binarize_ground_truth(image_from_array(arr), threshold));
      },
      py::arg("image"), py::arg("luma_threshold") = kDefaultGtThreshold);

  m.def(
      "confusion",
      [](const BoolArray& pred, const BoolArray& gt) { return confusion(mask_from_array(pred), mask_from_array(gt)); },
      py::arg("pred"), py::arg("gt"));
  m.def("precision", &precision, py::arg("cm"));
  m.def("accuracy", &accuracy, py::arg("cm"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"skinmask"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run a CLI command in-process; returns (exit_code, stdout, stderr).");

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
