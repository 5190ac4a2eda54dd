"""Curated per-locale material for the synthetic corpus generator.

Small hand-picked pools keep generation hermetic and seed-stable: no external
name or address providers. Sentence templates carry `{LABEL}` slots that the
generator fills with values matching the shipped registry patterns; fillers
are digit-free prose except for the deliberately numeric ones used to
exercise false-positive filtering.

Domains: Finance, Travel, Healthcare, IT, CPG, Media.
"""

EMAIL_DOMAINS = [
    "example.com", "mail.example.org", "corp.example.net", "post.example.se",
]

EMAIL_WORDS = [
    "billing", "support", "travel", "care", "orders", "media", "desk",
    "invoice", "booking", "clinic", "studio", "retail",
]

USERNAME_WORDS = [
    "polar", "fox", "lumen", "vega", "delta", "sable", "quill", "tundra",
    "cedar", "orbit", "pixel", "raven",
]

PASSWORD_PARTS = [
    "Brygga", "Kardemumma", "Fjord", "Lotus", "Granit", "Safir", "Humla",
    "Koral", "Njord", "Opal",
]

BANK = {
    "sv_SE": {
        "given": ["Anna", "Lars", "Elsa", "Johan", "Karin", "Mikael", "Astrid", "Oskar"],
        "family": ["Bergström", "Lindqvist", "Johansson", "Nilsson", "Åkesson", "Sjögren"],
        "streets": ["Storgatan", "Kungsgatan", "Drottninggatan", "Vasagatan"],
        "cities": ["Stockholm", "Göteborg", "Malmö"],
        "addr_format": "{street} {num}, {city}",
        "short": [
            ["IT", "{NAME} loggade in från {IP_ADDRESS}."],
            ["Finance", "{NAME} ringde {PHONE_SE}."],
        ],
        "sentences": [
            ["Finance", "Betalkortet {CREDIT_CARD} med koden {CVV} registrerades av {NAME}."],
            ["Finance", "Personnummer {PERSONNUMMER_SE} finns i låneansökan."],
            ["Travel", "Resenären {NAME} nås på {PHONE_SE} under resan."],
            ["Healthcare", "Patienten {NAME}, ålder {AGE}, bor på {ADDRESS}."],
            ["IT", "Kontot {USERNAME} anslöt från {IP_ADDRESS} med lösenordet {PASSWORD}."],
            ["IT", "Skicka svaret till {EMAIL} innan fredag."],
            ["CPG", "Ordern levereras till {ADDRESS} nästa vecka."],
            ["Media", "Intervjun med {NAME} sänds i morgon."],
        ],
        "fillers": [
            "Styrelsen godkände förslaget efter en kort diskussion.",
            "Leveransen försenades på grund av vädret.",
            "Kundtjänsten återkommer så snart som möjligt.",
            "Projektet följer den plan som presenterades i våras.",
            "Rapporten sammanfattar kvartalets viktigaste händelser.",
            "Mötet hölls i den stora salen bredvid receptionen.",
            "Avtalet förnyas automatiskt vid årsskiftet.",
        ],
        "numeric_fillers": [
            "Ordern omfattar 12 artiklar i olika storlekar.",
            "Lagret ligger vid port 7 på området.",
        ],
    },
    "vi_VN": {
        "given": ["An", "Bình", "Châu", "Dũng", "Hương", "Linh", "Minh", "Thảo"],
        "middle": ["Văn", "Thị", "Đức", "Ngọc"],
        "family": ["Nguyễn", "Trần", "Lê", "Phạm", "Hoàng"],
        "streets": ["Lê Lợi", "Trần Hưng Đạo", "Nguyễn Huệ", "Hai Bà Trưng"],
        "cities": ["Hà Nội", "Đà Nẵng", "Cần Thơ"],
        "addr_format": "{num} {street}, {city}",
        "short": [
            ["Finance", "{NAME} gọi số {PHONE_VN}."],
            ["IT", "{USERNAME} đăng nhập từ {IP_ADDRESS}."],
        ],
        "sentences": [
            ["Finance", "Khách hàng {NAME} đăng ký thẻ {CREDIT_CARD} với mã {CVV}."],
            ["Finance", "Căn cước công dân {CCCD_VN} đã được xác minh."],
            ["Travel", "Hành khách {NAME} đặt vé qua số {PHONE_VN}."],
            ["Healthcare", "Bệnh nhân {NAME}, {AGE} tuổi, sống tại {ADDRESS}."],
            ["IT", "Tài khoản {USERNAME} dùng mật khẩu {PASSWORD} để truy cập."],
            ["IT", "Gửi báo cáo tới {EMAIL} trước thứ sáu."],
            ["CPG", "Đơn hàng sẽ giao đến {ADDRESS} trong tuần."],
            ["Media", "Phóng viên {NAME} phụ trách chuyên mục này."],
        ],
        "fillers": [
            "Ban giám đốc đã phê duyệt kế hoạch mới.",
            "Cuộc họp diễn ra trong không khí thẳng thắn.",
            "Báo cáo quý được trình bày đầy đủ và rõ ràng.",
            "Dự án tiến triển đúng theo lộ trình đề ra.",
            "Bộ phận chăm sóc khách hàng sẽ phản hồi sớm.",
            "Hợp đồng được gia hạn theo thỏa thuận chung.",
            "Kho hàng hoạt động bình thường trong dịp lễ.",
        ],
        "numeric_fillers": [
            "Lô hàng gồm 12 thùng được niêm phong.",
            "Cuộc họp dời sang phòng 7 ở tầng trệt.",
        ],
    },
    "zh_CN": {
        "given": ["伟", "芳", "军", "静", "磊", "娜", "强", "敏"],
        "family": ["王", "李", "张", "刘", "陈", "杨"],
        "streets": ["建国路", "人民路", "中山路", "解放路"],
        "cities": ["北京市朝阳区", "上海市浦东新区", "广州市天河区"],
        "addr_format": "{city}{street}{num}号",
        "short": [
            ["Finance", "{NAME}的电话是{PHONE_CN}。"],
            ["IT", "{USERNAME}从 {IP_ADDRESS} 登录。"],
        ],
        "sentences": [
            ["Finance", "客户{NAME}的银行卡 {CREDIT_CARD} 安全码 {CVV} 已核对。"],
            ["Finance", "身份证号码{NATIONAL_ID_CN}通过了实名认证。"],
            ["Travel", "旅客{NAME}预留的手机号为{PHONE_CN}。"],
            ["Healthcare", "病人{NAME}，年龄 {AGE} 岁，住址为{ADDRESS}。"],
            ["IT", "账号{USERNAME}使用密码 {PASSWORD} 登录了系统。"],
            ["IT", "请将材料发送到 {EMAIL}。"],
            ["CPG", "货物将配送至{ADDRESS}。"],
            ["Media", "记者{NAME}负责本期专栏。"],
        ],
        "fillers": [
            "管理层已经批准了新的季度计划。",
            "会议纪要将在内部平台公布。",
            "项目整体进度符合预期安排。",
            "客服团队会尽快回复所有咨询。",
            "合同条款与上一年度保持一致。",
            "仓库在节假日期间照常运转。",
            "报告详细说明了运营情况。",
        ],
        "numeric_fillers": [
            "这批货物共 12 箱已经封存。",
            "会议改到 7 号楼的大会议室。",
        ],
    },
    "zh_SG": {
        "given": ["伟", "婷", "俊", "慧", "杰", "玲"],
        "family": ["陈", "林", "黄", "吴", "郑"],
        "streets": ["乌节路", "丹戎巴葛路", "武吉知马路"],
        "cities": ["新加坡中区", "新加坡东区"],
        "addr_format": "{city}{street}{num}号",
        "short": [
            ["Finance", "{NAME}的电话是{PHONE_SG}。"],
            ["IT", "{USERNAME}从 {IP_ADDRESS} 登录。"],
        ],
        "sentences": [
            ["Finance", "客户{NAME}的信用卡 {CREDIT_CARD} 安全码 {CVV} 已确认。"],
            ["Finance", "身份证{NRIC_SG}已经通过核验。"],
            ["Travel", "旅客{NAME}的联系电话是{PHONE_SG}。"],
            ["Healthcare", "病人{NAME}，年龄 {AGE} 岁，地址为{ADDRESS}。"],
            ["IT", "账号{USERNAME}使用密码 {PASSWORD} 访问平台。"],
            ["IT", "请把表格寄到 {EMAIL}。"],
            ["CPG", "包裹将送往{ADDRESS}。"],
            ["Media", "编辑{NAME}整理了这篇报道。"],
        ],
        "fillers": [
            "董事会通过了本年度的预算案。",
            "团队按照计划推进各项工作。",
            "客户服务部门将跟进后续事宜。",
            "合同细节已经双方确认无误。",
            "仓储安排在假期保持不变。",
            "报告总结了主要运营指标。",
        ],
        "numeric_fillers": [
            "这批订单共 12 件待出库。",
            "活动地点改为 7 号展厅。",
        ],
    },
    "pt_BR": {
        "given": ["João", "Maria", "Pedro", "Ana", "Carlos", "Beatriz", "Lucas"],
        "family": ["Silva", "Santos", "Oliveira", "Costa", "Pereira"],
        "streets": ["Rua das Flores", "Avenida Paulista", "Rua Augusta"],
        "cities": ["São Paulo", "Rio de Janeiro", "Curitiba"],
        "addr_format": "{street} {num}, {city}",
        "short": [
            ["Finance", "{NAME} ligou do {PHONE_BR}."],
            ["IT", "{USERNAME} conectou de {IP_ADDRESS}."],
        ],
        "sentences": [
            ["Finance", "O cartão {CREDIT_CARD} com código {CVV} pertence a {NAME}."],
            ["Finance", "O CPF {CPF_BR} consta no cadastro."],
            ["Travel", "O passageiro {NAME} atende no {PHONE_BR}."],
            ["Healthcare", "Paciente {NAME}, {AGE} anos, reside em {ADDRESS}."],
            ["IT", "A conta {USERNAME} usou a senha {PASSWORD} no acesso."],
            ["IT", "Envie o laudo para {EMAIL}."],
            ["CPG", "A entrega será feita em {ADDRESS}."],
            ["Media", "A coluna desta semana entrevista {NAME}."],
        ],
        "fillers": [
            "A diretoria aprovou o novo cronograma sem ressalvas.",
            "O relatório resume os principais resultados do trimestre.",
            "A equipe de atendimento retorna em breve.",
            "O projeto segue dentro do prazo combinado.",
            "O contrato será renovado automaticamente.",
            "A reunião aconteceu na sala ao lado da recepção.",
        ],
        "numeric_fillers": [
            "O pedido reúne 12 itens de tamanhos variados.",
            "O estoque fica no galpão 7 do condomínio.",
        ],
    },
    "pt_PT": {
        "given": ["Tiago", "Inês", "Miguel", "Sofia", "Rui", "Marta"],
        "family": ["Ferreira", "Almeida", "Carvalho", "Sousa", "Martins"],
        "streets": ["Rua do Carmo", "Avenida da Liberdade", "Rua de Santa Catarina"],
        "cities": ["Lisboa", "Porto", "Coimbra"],
        "addr_format": "{street} {num}, {city}",
        "short": [
            ["Finance", "{NAME} ligou do {PHONE_PT}."],
            ["IT", "{USERNAME} entrou de {IP_ADDRESS}."],
        ],
        "sentences": [
            ["Finance", "O cartão {CREDIT_CARD} com código {CVV} está em nome de {NAME}."],
            ["Finance", "O contribuinte {NIF_PT} consta do registo."],
            ["Travel", "O passageiro {NAME} atende pelo {PHONE_PT}."],
            ["Healthcare", "Doente {NAME}, {AGE} anos, reside em {ADDRESS}."],
            ["IT", "A conta {USERNAME} acedeu com a palavra-passe {PASSWORD}."],
            ["IT", "Envie o relatório para {EMAIL}."],
            ["CPG", "A encomenda segue para {ADDRESS}."],
            ["Media", "A reportagem cita {NAME} como fonte principal."],
        ],
        "fillers": [
            "A administração validou o plano para o próximo ano.",
            "O relatório descreve as operações com detalhe.",
            "A equipa de apoio responderá com brevidade.",
            "O projeto decorre conforme o previsto.",
            "O contrato mantém as condições do ano passado.",
            "A reunião decorreu num ambiente construtivo.",
        ],
        "numeric_fillers": [
            "A encomenda junta 12 volumes selados.",
            "O armazém fica no lote 7 da zona industrial.",
        ],
    },
    "pl_PL": {
        "given": ["Jan", "Anna", "Piotr", "Katarzyna", "Tomasz", "Magdalena"],
        "family": ["Kowalski", "Nowak", "Wiśniewski", "Zielińska", "Mazur"],
        "streets": ["ul. Długa", "ul. Marszałkowska", "ul. Piotrkowska"],
        "cities": ["Warszawa", "Kraków", "Łódź"],
        "addr_format": "{street} {num}, {city}",
        "short": [
            ["Finance", "{NAME} dzwonił z numeru {PHONE_PL}."],
            ["IT", "{USERNAME} zalogował się z {IP_ADDRESS}."],
        ],
        "sentences": [
            ["Finance", "Karta {CREDIT_CARD} z kodem {CVV} należy do {NAME}."],
            ["Finance", "PESEL {PESEL_PL} widnieje we wniosku."],
            ["Travel", "Podróżny {NAME} jest dostępny pod {PHONE_PL}."],
            ["Healthcare", "Pacjent {NAME}, wiek {AGE}, mieszka przy {ADDRESS}."],
            ["IT", "Konto {USERNAME} użyło hasła {PASSWORD} przy logowaniu."],
            ["IT", "Proszę wysłać skan na {EMAIL}."],
            ["CPG", "Dostawa trafi na {ADDRESS}."],
            ["Media", "Do audycji zaproszono {NAME}."],
        ],
        "fillers": [
            "Zarząd przyjął harmonogram bez uwag.",
            "Raport podsumowuje wyniki minionego kwartału.",
            "Dział obsługi odpowie najszybciej jak to możliwe.",
            "Projekt przebiega zgodnie z planem.",
            "Umowa przedłuża się automatycznie.",
            "Spotkanie odbyło się w sali obok recepcji.",
        ],
        "numeric_fillers": [
            "Zamówienie obejmuje 12 pozycji w różnych rozmiarach.",
            "Magazyn znajduje się przy bramie 7.",
        ],
    },
    "hi_IN": {
        "given": ["राहुल", "प्रिया", "अमित", "सुनीता", "विकास", "नेहा"],
        "family": ["शर्मा", "वर्मा", "गुप्ता", "सिंह", "मेहता"],
        "streets": ["गांधी मार्ग", "नेहरू रोड", "स्टेशन रोड"],
        "cities": ["दिल्ली", "मुंबई", "जयपुर"],
        "addr_format": "{num} {street}, {city}",
        "short": [
            ["Finance", "{NAME} का नंबर {PHONE_IN} है।"],
            ["IT", "{USERNAME} ने {IP_ADDRESS} से लॉगिन किया।"],
        ],
        "sentences": [
            ["Finance", "ग्राहक {NAME} का कार्ड {CREDIT_CARD} और कोड {CVV} दर्ज है।"],
            ["Finance", "आधार {AADHAAR_IN} सत्यापित हो गया।"],
            ["Finance", "खाता {BANK_ACCOUNT_IN} सक्रिय है और पैन {PAN_IN} जुड़ा है।"],
            ["Travel", "यात्री {NAME} से {PHONE_IN} पर संपर्क करें।"],
            ["Healthcare", "मरीज {NAME}, उम्र {AGE}, पता {ADDRESS} है।"],
            ["IT", "खाते {USERNAME} ने पासवर्ड {PASSWORD} से प्रवेश किया।"],
            ["IT", "रिपोर्ट {EMAIL} पर भेजें।"],
            ["CPG", "सामान {ADDRESS} पर पहुँचाया जाएगा।"],
            ["Media", "इस अंक में {NAME} का साक्षात्कार है।"],
        ],
        "fillers": [
            "प्रबंधन ने नई योजना को मंजूरी दे दी।",
            "रिपोर्ट में तिमाही के नतीजे शामिल हैं।",
            "ग्राहक सेवा टीम जल्द जवाब देगी।",
            "परियोजना तय समय पर चल रही है।",
            "अनुबंध की शर्तें पहले जैसी रहेंगी।",
            "बैठक स्वागत कक्ष के पास वाले कमरे में हुई।",
        ],
        "numeric_fillers": [
            "इस खेप में 12 डिब्बे शामिल हैं।",
            "गोदाम गेट 7 के पास स्थित है।",
        ],
    },
    "fi_FI": {
        "given": ["Matti", "Liisa", "Juha", "Aino", "Pekka", "Sari"],
        "family": ["Virtanen", "Korhonen", "Mäkinen", "Nieminen", "Laine"],
        "streets": ["Mannerheimintie", "Aleksanterinkatu", "Hämeentie"],
        "cities": ["Helsinki", "Tampere", "Turku"],
        "addr_format": "{street} {num}, {city}",
        "short": [
            ["Finance", "{NAME} soitti numerosta {PHONE_FI}."],
            ["IT", "{USERNAME} kirjautui osoitteesta {IP_ADDRESS}."],
        ],
        "sentences": [
            ["Finance", "Kortti {CREDIT_CARD} ja turvakoodi {CVV} kuuluvat asiakkaalle {NAME}."],
            ["Finance", "Henkilötunnus {HETU_FI} löytyy hakemuksesta."],
            ["Travel", "Matkustaja {NAME} tavoitetaan numerosta {PHONE_FI}."],
            ["Healthcare", "Potilas {NAME}, ikä {AGE}, asuu osoitteessa {ADDRESS}."],
            ["IT", "Tili {USERNAME} käytti salasanaa {PASSWORD} kirjautuessaan."],
            ["IT", "Lähetä lomake osoitteeseen {EMAIL}."],
            ["CPG", "Tilaus toimitetaan osoitteeseen {ADDRESS}."],
            ["Media", "Haastattelussa on mukana {NAME}."],
        ],
        "fillers": [
            "Johtoryhmä hyväksyi suunnitelman kokouksessaan.",
            "Raportti kokoaa vuosineljänneksen tapahtumat.",
            "Asiakaspalvelu vastaa mahdollisimman pian.",
            "Hanke etenee sovitussa aikataulussa.",
            "Sopimus jatkuu entisin ehdoin.",
            "Kokous pidettiin aulan viereisessä salissa.",
        ],
        "numeric_fillers": [
            "Erä sisältää 12 pakettia eri kokoja.",
            "Varasto sijaitsee portin 7 vieressä.",
        ],
    },
    "ar_AE": {
        "given": ["أحمد", "فاطمة", "محمد", "عائشة", "خالد", "مريم"],
        "family": ["الهاشمي", "المنصوري", "الزعابي", "النعيمي", "الشامسي"],
        "streets": ["شارع الشيخ زايد", "شارع خليفة", "شارع الكورنيش"],
        "cities": ["دبي", "أبوظبي", "الشارقة"],
        "addr_format": "{street} {num}، {city}",
        "short": [
            ["Finance", "{NAME} اتصل من الرقم {PHONE_AE}."],
            ["IT", "{USERNAME} دخل من {IP_ADDRESS}."],
        ],
        "sentences": [
            ["Finance", "بطاقة {CREDIT_CARD} برمز {CVV} مسجلة باسم {NAME}."],
            ["Finance", "الهوية الإماراتية {EMIRATES_ID_AE} تم التحقق منها."],
            ["Travel", "المسافر {NAME} متاح على {PHONE_AE}."],
            ["Healthcare", "المريض {NAME}، العمر {AGE}، يسكن في {ADDRESS}."],
            ["IT", "الحساب {USERNAME} استخدم كلمة المرور {PASSWORD} للدخول."],
            ["IT", "أرسل النموذج إلى {EMAIL}."],
            ["CPG", "سيتم توصيل الطلب إلى {ADDRESS}."],
            ["Media", "العدد الجديد يحاور {NAME}."],
        ],
        "fillers": [
            "وافقت الإدارة على الخطة الجديدة.",
            "يلخص التقرير نتائج الربع الأخير.",
            "سيرد فريق الدعم في أقرب وقت.",
            "يسير المشروع وفق الجدول المتفق عليه.",
            "يتجدد العقد تلقائيا بنفس الشروط.",
            "عقد الاجتماع في القاعة المجاورة للاستقبال.",
        ],
        "numeric_fillers": [
            "تضم الشحنة 12 صندوقا مغلقا.",
            "يقع المستودع قرب البوابة 7.",
        ],
    },
    "nl_NL": {
        "given": ["Jan", "Sanne", "Pieter", "Lotte", "Daan", "Femke"],
        "family": ["van den Berg", "de Vries", "Jansen", "van Dijk", "Bakker"],
        "streets": ["Kerkstraat", "Hoofdstraat", "Dorpsstraat"],
        "cities": ["Amsterdam", "Utrecht", "Rotterdam"],
        "addr_format": "{street} {num}, {city}",
        "short": [
            ["Finance", "{NAME} belde via {PHONE_NL}."],
            ["IT", "{USERNAME} logde in vanaf {IP_ADDRESS}."],
        ],
        "sentences": [
            ["Finance", "De kaart {CREDIT_CARD} met code {CVV} staat op naam van {NAME}."],
            ["Finance", "Het burgerservicenummer {BSN_NL} is gecontroleerd."],
            ["Travel", "Reiziger {NAME} is bereikbaar op {PHONE_NL}."],
            ["Healthcare", "Patiënt {NAME}, leeftijd {AGE}, woont op {ADDRESS}."],
            ["IT", "Account {USERNAME} gebruikte wachtwoord {PASSWORD} bij het inloggen."],
            ["IT", "Stuur het formulier naar {EMAIL}."],
            ["CPG", "De bestelling wordt bezorgd op {ADDRESS}."],
            ["Media", "De redactie sprak met {NAME}."],
        ],
        "fillers": [
            "Het bestuur keurde het voorstel zonder wijzigingen goed.",
            "Het rapport vat het afgelopen kwartaal samen.",
            "De klantenservice reageert zo snel mogelijk.",
            "Het project loopt volgens planning.",
            "Het contract wordt stilzwijgend verlengd.",
            "De vergadering vond plaats naast de receptie.",
        ],
        "numeric_fillers": [
            "De order telt 12 artikelen in verschillende maten.",
            "Het magazijn ligt bij poort 7 op het terrein.",
        ],
    },
    "nl_BE": {
        "given": ["Wout", "Marieke", "Lukas", "Eline", "Stijn", "Nore"],
        "family": ["Peeters", "Janssens", "Maes", "Claes", "Willems"],
        "streets": ["Kerkstraat", "Stationsstraat", "Nieuwstraat"],
        "cities": ["Antwerpen", "Gent", "Leuven"],
        "addr_format": "{street} {num}, {city}",
        "short": [
            ["Finance", "{NAME} belde via {PHONE_BE}."],
            ["IT", "{USERNAME} meldde zich aan vanaf {IP_ADDRESS}."],
        ],
        "sentences": [
            ["Finance", "De kaart {CREDIT_CARD} met code {CVV} hoort bij {NAME}."],
            ["Finance", "Het rijksregisternummer {SSN_BE} werd nagekeken."],
            ["Travel", "Reiziger {NAME} is te bereiken op {PHONE_BE}."],
            ["Healthcare", "Patiënt {NAME}, leeftijd {AGE}, woont op {ADDRESS}."],
            ["IT", "Account {USERNAME} gebruikte wachtwoord {PASSWORD} voor de toegang."],
            ["IT", "Bezorg het attest via {EMAIL}."],
            ["CPG", "De levering gaat naar {ADDRESS}."],
            ["Media", "Het weekblad interviewde {NAME}."],
        ],
        "fillers": [
            "De raad keurde de begroting vlot goed.",
            "Het verslag bundelt de cijfers van het kwartaal.",
            "De klantendienst antwoordt zo spoedig mogelijk.",
            "Het project zit op schema.",
            "De overeenkomst loopt gewoon verder.",
            "De vergadering ging door in de zaal naast het onthaal.",
        ],
        "numeric_fillers": [
            "De bestelling bevat 12 stuks in diverse maten.",
            "De loods bevindt zich aan poort 7.",
        ],
    },
    "no_NO": {
        "given": ["Ola", "Kari", "Erik", "Ingrid", "Magnus", "Silje"],
        "family": ["Hansen", "Johansen", "Berg", "Solberg", "Dahl"],
        "streets": ["Storgata", "Kirkegata", "Strandveien"],
        "cities": ["Oslo", "Bergen", "Trondheim"],
        "addr_format": "{street} {num}, {city}",
        "short": [
            ["Finance", "{NAME} ringte fra {PHONE_NO}."],
            ["IT", "{USERNAME} logget inn fra {IP_ADDRESS}."],
        ],
        "sentences": [
            ["Finance", "Kortet {CREDIT_CARD} med kode {CVV} tilhører {NAME}."],
            ["Finance", "Fødselsnummeret {FODSELSNUMMER_NO} ligger i søknaden."],
            ["Finance", "Kontonummeret {BANK_ACCOUNT_NO} er aktivt for trekk."],
            ["Travel", "Reisende {NAME} nås på {PHONE_NO}."],
            ["Healthcare", "Pasient {NAME}, alder {AGE}, bor i {ADDRESS}."],
            ["IT", "Kontoen {USERNAME} brukte passordet {PASSWORD} ved pålogging."],
            ["IT", "Send skjemaet til {EMAIL}."],
            ["CPG", "Ordren leveres til {ADDRESS}."],
            ["Media", "Ukens portrett handler om {NAME}."],
        ],
        "fillers": [
            "Styret godkjente planen uten endringer.",
            "Rapporten oppsummerer kvartalets drift.",
            "Kundeservice svarer så raskt som mulig.",
            "Prosjektet følger oppsatt fremdrift.",
            "Avtalen fornyes på samme vilkår.",
            "Møtet ble holdt i salen ved resepsjonen.",
        ],
        "numeric_fillers": [
            "Ordren teller 12 kolli i ulike størrelser.",
            "Lageret ligger ved port 7 på området.",
        ],
    },
}
