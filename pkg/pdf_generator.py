from reportlab.lib.pagesizes import letter, landscape
from reportlab.lib import colors
from reportlab.lib.units import inch
from reportlab.platypus import SimpleDocTemplate, Table, TableStyle, Paragraph, Spacer, Image as RLImage
from reportlab.lib.styles import getSampleStyleSheet, ParagraphStyle
from reportlab.lib.enums import TA_CENTER
from datetime import datetime
import hashlib
import json
import logging
import qrcode
import io

logger = logging.getLogger(__name__)

PASS_COLOR = colors.HexColor('#e8f5e9')
FAIL_COLOR = colors.HexColor('#ffebee')
HEADER_COLOR = colors.HexColor('#f0f0f0')

MAX_TABLE_ROWS = 400


def payload_digest(payload):
    text = json.dumps(payload, sort_keys=True, separators=(',', ':'))
    return hashlib.sha256(text.encode('utf-8')).hexdigest()


def _table_style(font_size):
    return TableStyle([
        ('BACKGROUND', (0, 0), (-1, 0), HEADER_COLOR),
        ('TEXTCOLOR', (0, 0), (-1, -1), colors.black),
        ('ALIGN', (0, 0), (-1, -1), 'LEFT'),
        ('FONTNAME', (0, 0), (-1, 0), 'Helvetica-Bold'),
        ('FONTSIZE', (0, 0), (-1, -1), font_size),
        ('BOTTOMPADDING', (0, 0), (-1, -1), 4),
        ('GRID', (0, 0), (-1, -1), 0.5, colors.grey)
    ])


def _rows_table(rows):
    header = list(rows[0].keys())
    data = [header] + [[str(row.get(key, '')) for key in header] for row in rows[:MAX_TABLE_ROWS]]
    table = Table(data, repeatRows=1)
    table.setStyle(_table_style(7))
    return table


def _checks_table(checks):
    header = ['check', 'inputs', 'lhs', 'rhs', 'abs diff', 'status']
    data = [header]
    style = _table_style(6)
    for index, check in enumerate(checks[:MAX_TABLE_ROWS], start=1):
        inputs = ', '.join(f"{key}={value}" for key, value in check.get('inputs', {}).items())
        data.append([
            check.get('name', ''),
            inputs,
            check.get('lhs', ''),
            check.get('rhs', ''),
            check.get('abs_diff', ''),
            check.get('status', ''),
        ])
        shade = PASS_COLOR if check.get('status') == 'PASS' else FAIL_COLOR
        style.add('BACKGROUND', (0, index), (-1, index), shade)
    table = Table(data, repeatRows=1)
    table.setStyle(style)
    return table


def generate_pdf_report(report_data, output_path):
    try:
        doc = SimpleDocTemplate(output_path, pagesize=landscape(letter))
        story = []
        styles = getSampleStyleSheet()

        title_style = ParagraphStyle(
            'CustomTitle',
            parent=styles['Heading1'],
            fontSize=20,
            textColor=colors.HexColor('#3F51B5'),
            spaceAfter=20,
            alignment=TA_CENTER
        )

        command = report_data.get('command', 'report')
        story.append(Paragraph(f"Kudla Green Toolkit: {command}", title_style))
        story.append(Spacer(1, 0.1*inch))

        info_data = [['Command:', command]]
        info_data += [[f"{key}:", str(value)] for key, value in report_data.get('inputs', {}).items()]
        info_table = Table(info_data, colWidths=[2*inch, 6*inch])
        info_table.setStyle(TableStyle([
            ('BACKGROUND', (0, 0), (0, -1), HEADER_COLOR),
            ('FONTNAME', (0, 0), (0, -1), 'Helvetica-Bold'),
            ('FONTSIZE', (0, 0), (-1, -1), 10),
            ('BOTTOMPADDING', (0, 0), (-1, -1), 8),
            ('GRID', (0, 0), (-1, -1), 1, colors.grey)
        ]))
        story.append(info_table)
        story.append(Spacer(1, 0.3*inch))

        if report_data.get('rows'):
            story.append(Paragraph("<b>Coefficients</b>", styles['Heading2']))
            story.append(_rows_table(report_data['rows']))
        if report_data.get('result'):
            story.append(Paragraph("<b>Result</b>", styles['Heading2']))
            story.append(_rows_table([report_data['result']]))
        if report_data.get('checks'):
            checks = report_data['checks']
            passed = sum(1 for check in checks if check.get('status') == 'PASS')
            story.append(Paragraph(f"<b>Checks: {passed}/{len(checks)} passed</b>", styles['Heading2']))
            story.append(_checks_table(checks))

        digest = payload_digest(report_data)
        qr = qrcode.QRCode(version=1, box_size=3, border=2)
        qr.add_data(f"sha256:{digest}")
        qr.make(fit=True)
        qr_img = qr.make_image(fill_color="black", back_color="white")

        qr_buffer = io.BytesIO()
        qr_img.save(qr_buffer, format='PNG')
        qr_buffer.seek(0)

        story.append(Spacer(1, 0.3*inch))
        story.append(RLImage(qr_buffer, width=1.5*inch, height=1.5*inch))

        footer = Paragraph(
            f"<i>Generated by Kudla Green Toolkit - {datetime.now().strftime('%Y-%m-%d %H:%M:%S')} - sha256 {digest[:16]}</i>",
            styles['Normal']
        )
        story.append(Spacer(1, 0.2*inch))
        story.append(footer)

        doc.build(story)
        return True
    except Exception:
        logger.exception("PDF generation failed for %s", output_path)
        return False
