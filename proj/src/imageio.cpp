#include "mutinfo/imageio.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <memory>
#include <vector>

#include <jpeglib.h>
#include <png.h>
#include <csetjmp>

#include "mutinfo/preprocess.hpp"

namespace mutinfo {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

std::uint8_t luma601(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    const double y = 0.299 * r + 0.587 * g + 0.114 * b;
    return static_cast<std::uint8_t>(std::clamp(detail::round_half_up(y), 0, 255));
}

// Interleaved rows with 1 (gray), 2 (gray+alpha), 3 (rgb) or 4 (rgba)
// bytes per pixel; alpha is dropped, not composited.
GrayImage gray_from_rows(int width, int height, int channels,
                         const std::vector<std::uint8_t>& rows) {
    std::vector<std::uint8_t> pixels(static_cast<std::size_t>(width) * height);
    const std::size_t n = pixels.size();
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint8_t* px = rows.data() + i * channels;
        pixels[i] = channels <= 2 ? px[0] : luma601(px[0], px[1], px[2]);
    }
    return GrayImage(width, height, std::move(pixels));
}

struct PngReader {
    png_structp png = nullptr;
    png_infop info = nullptr;

    ~PngReader() {
        if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
    }
};

// Quiet handlers: failures surface as DecodeError, not stderr chatter.
void png_error_quiet(png_structp png, png_const_charp) {
    png_longjmp(png, 1);
}
void png_warning_quiet(png_structp, png_const_charp) {}

GrayImage decode_png(std::FILE* fp, const std::string& name) {
    PngReader r;
    r.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, png_error_quiet,
                                   png_warning_quiet);
    if (!r.png) throw DecodeError("png: out of memory decoding '" + name + "'");
    r.info = png_create_info_struct(r.png);
    if (!r.info) throw DecodeError("png: out of memory decoding '" + name + "'");

    // libpng reports errors via longjmp; keep buffers outside the jump scope.
    int width = 0, height = 0, channels = 0;
    std::vector<std::uint8_t> data;
    std::vector<png_bytep> row_ptrs;

    if (setjmp(png_jmpbuf(r.png))) {
        throw DecodeError("png: corrupt or unsupported file '" + name + "'");
    }

    png_init_io(r.png, fp);
    png_read_info(r.png, r.info);

    png_set_strip_16(r.png);  // 16-bit sources keep the high byte
    png_set_palette_to_rgb(r.png);
    png_set_expand_gray_1_2_4_to_8(r.png);
    if (png_get_valid(r.png, r.info, PNG_INFO_tRNS)) {
        png_set_tRNS_to_alpha(r.png);
    }
    png_set_interlace_handling(r.png);
    png_read_update_info(r.png, r.info);

    width = static_cast<int>(png_get_image_width(r.png, r.info));
    height = static_cast<int>(png_get_image_height(r.png, r.info));
    channels = png_get_channels(r.png, r.info);
    if (width < 1 || height < 1 || channels < 1 || channels > 4) {
        throw DecodeError("png: unsupported layout in '" + name + "'");
    }

    const std::size_t stride = static_cast<std::size_t>(width) * channels;
    data.resize(stride * height);
    row_ptrs.resize(height);
    for (int y = 0; y < height; ++y) {
        row_ptrs[y] = data.data() + stride * y;
    }
    png_read_image(r.png, row_ptrs.data());
    png_read_end(r.png, nullptr);

    return gray_from_rows(width, height, channels, data);
}

struct JpegErrorMgr {
    jpeg_error_mgr base;
    std::jmp_buf jump;
};

void jpeg_error_exit(j_common_ptr cinfo) {
    auto* mgr = reinterpret_cast<JpegErrorMgr*>(cinfo->err);
    std::longjmp(mgr->jump, 1);
}

void jpeg_output_quiet(j_common_ptr) {}

GrayImage decode_jpeg(std::FILE* fp, const std::string& name) {
    jpeg_decompress_struct cinfo{};
    JpegErrorMgr err{};
    cinfo.err = jpeg_std_error(&err.base);
    err.base.error_exit = jpeg_error_exit;
    err.base.output_message = jpeg_output_quiet;

    std::vector<std::uint8_t> data;
    if (setjmp(err.jump)) {
        jpeg_destroy_decompress(&cinfo);
        throw DecodeError("jpeg: corrupt or unsupported file '" + name + "'");
    }

    jpeg_create_decompress(&cinfo);
    jpeg_stdio_src(&cinfo, fp);
    jpeg_read_header(&cinfo, TRUE);
    cinfo.out_color_space = JCS_RGB;
    jpeg_start_decompress(&cinfo);

    const int width = static_cast<int>(cinfo.output_width);
    const int height = static_cast<int>(cinfo.output_height);
    const int channels = cinfo.output_components;
    if (width < 1 || height < 1 || channels != 3) {
        jpeg_destroy_decompress(&cinfo);
        throw DecodeError("jpeg: unsupported layout in '" + name + "'");
    }

    const std::size_t stride = static_cast<std::size_t>(width) * channels;
    data.resize(stride * height);
    while (cinfo.output_scanline < cinfo.output_height) {
        JSAMPROW row = data.data() + stride * cinfo.output_scanline;
        jpeg_read_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_decompress(&cinfo);
    jpeg_destroy_decompress(&cinfo);

    return gray_from_rows(width, height, channels, data);
}

}  // namespace

GrayImage load_grayscale(const std::filesystem::path& path, std::optional<TargetSize> size) {
    if (size) {
        detail::require_valid_size(*size);
    }
    const std::string name = path.string();

    FilePtr fp(std::fopen(name.c_str(), "rb"));
    if (!fp) {
        throw IoError("cannot open '" + name + "' for reading");
    }

    unsigned char magic[8] = {};
    const std::size_t got = std::fread(magic, 1, sizeof(magic), fp.get());
    std::rewind(fp.get());

    GrayImage img = [&] {
        if (got >= 8 && png_sig_cmp(magic, 0, 8) == 0) {
            return decode_png(fp.get(), name);
        }
        if (got >= 3 && magic[0] == 0xFF && magic[1] == 0xD8 && magic[2] == 0xFF) {
            return decode_jpeg(fp.get(), name);
        }
        throw DecodeError("'" + name + "' is not a PNG or JPEG file");
    }();

    if (size) {
        return resize(img, *size);
    }
    return img;
}

}  // namespace mutinfo
